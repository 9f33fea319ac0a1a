//! Reference bandit algorithms behind the shared select/update contract:
//! Thompson sampling with a uniform prior, UCB1, anytime Exp3, the gradient
//! bandit algorithm, and epsilon-greedy with fixed or decaying exploration.

pub mod common;
pub mod eps_greedy;
pub mod error;
pub mod exp3;
pub mod gba;
pub mod thompson;
pub mod ucb1;

pub use eps_greedy::{EpsGreedy, EpsMode};
pub use error::BaselineError;
pub use exp3::{exp3_eta, Exp3};
pub use gba::Gba;
pub use thompson::Thompson;
pub use ucb1::Ucb1;
