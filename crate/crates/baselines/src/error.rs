use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BaselineError {
    #[error("need at least 2 arms, got {0}")]
    TooFewArms(usize),
    #[error("time index must be at least 1, got {0}")]
    InvalidTime(u64),
    #[error("epsilon must lie in [0, 1], got {0}")]
    EpsOutOfRange(f64),
    #[error("gradient step size must be positive, got {0}")]
    StepSizeOutOfRange(f64),
}
