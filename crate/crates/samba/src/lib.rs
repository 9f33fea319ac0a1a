//! SAMBA: a policy-gradient bandit algorithm whose state is a probability
//! vector over arms, updated by stochastic approximation with a
//! state-dependent learning rate. With an admissible rate the state
//! concentrates on the optimal arm and cumulative regret grows
//! (poly-)logarithmically.

pub mod agent;
pub mod error;
pub mod quadrature;
pub mod schedule;
pub mod state;

pub use agent::SambaAgent;
pub use error::{SambaError, ScheduleError};
pub use quadrature::adaptive_simpson;
pub use schedule::{
    alpha_threshold, gamma_from_l, Schedule, ScheduleSpec, SlowlyVarying, DEFAULT_QUADRATURE_TOL,
};
pub use state::{leading_arm, samba_select, samba_update, SambaState};
