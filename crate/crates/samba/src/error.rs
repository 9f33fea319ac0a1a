use bandit_core::BanditError;
use thiserror::Error;

/// Errors from learning-rate schedule construction and evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScheduleError {
    #[error("fixed learning rate alpha must lie in (0, 1), got {0}")]
    AlphaOutOfRange(f64),
    #[error("cooling rate beta must lie in (0, 1], got {0}; values above 1 lose the regret guarantee and need the `unvalidated` flag")]
    BetaOutOfRange(f64),
    #[error("cooling rate beta must be positive, got {0}")]
    BetaNotPositive(f64),
    #[error("schedules are defined for probabilities in (0, 1], got {0}")]
    ProbOutOfDomain(f64),
    #[error("quadrature tolerance must be positive, got {0}")]
    TolOutOfRange(f64),
    #[error("slowly varying function left [0, 1]: l({u}) = {value}")]
    SlowlyVaryingOutOfRange { u: f64, value: f64 },
    #[error("adaptive quadrature did not converge on [{a}, {b}]")]
    QuadratureNotConverged { a: f64, b: f64 },
    #[error("unknown builtin slowly varying function {0:?}")]
    UnknownBuiltin(String),
    #[error("threshold needs 0 < delta <= r_star <= 1, got delta = {delta}, r_star = {r_star}")]
    ThresholdDomain { r_star: f64, delta: f64 },
}

/// Errors from the simplex update.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SambaError {
    #[error(transparent)]
    Schedule(#[from] ScheduleError),
    #[error("arm index {arm} out of range for {n_arms} arms")]
    ArmOutOfRange { arm: usize, n_arms: usize },
    #[error("reward must be 0 or 1, got {0}")]
    InvalidReward(u8),
    #[error("schedule yields alpha({p}) = {alpha} >= 1 for arm {arm}; this violates the positivity guarantee of the update")]
    AlphaGuard { arm: usize, p: f64, alpha: f64 },
    #[error("state needs at least 2 arms, got {0}")]
    TooFewArms(usize),
    #[error("update left the simplex: {0}")]
    Invariant(BanditError),
    #[error("probability floor must lie in (0, 1/n), got {0}")]
    FloorOutOfRange(f64),
}
