//! Bernoulli multi-armed bandit environment shared by every algorithm in the
//! workspace: arm means and gaps, reward sampling, per-step regret accounting,
//! probability vectors on the simplex, and reproducible seeded RNG streams.

pub mod agent;
pub mod error;
pub mod instance;
pub mod probs;
pub mod rng;

pub use agent::{Agent, RewardSample};
pub use error::{AgentError, BanditError};
pub use instance::BanditInstance;
pub use probs::ProbVector;
pub use rng::{derive_seed, RngStream};
