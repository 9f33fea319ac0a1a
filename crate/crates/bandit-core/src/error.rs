use thiserror::Error;

/// Errors raised by the bandit environment.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BanditError {
    #[error("a bandit instance needs at least 2 arms, got {0}")]
    TooFewArms(usize),
    #[error("arm mean must lie in [0, 1]: means[{index}] = {value}")]
    MeanOutOfRange { index: usize, value: f64 },
    #[error("arm index {arm} out of range for {n_arms} arms")]
    ArmOutOfRange { arm: usize, n_arms: usize },
    #[error("probability vector entry {index} is negative: {value}")]
    NegativeProbability { index: usize, value: f64 },
    #[error("probability vector sums to {sum}, which is farther than {tol} from 1")]
    NotNormalized { sum: f64, tol: f64 },
    #[error("a probability vector needs at least 2 entries, got {0}")]
    TooFewEntries(usize),
}

/// Errors surfaced by an [`crate::Agent`] while learning.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AgentError {
    #[error("arm index {arm} out of range for {n_arms} arms")]
    ArmOutOfRange { arm: usize, n_arms: usize },
    #[error("reward must be 0 or 1, got {0}")]
    InvalidReward(u8),
    #[error("update rejected: {0}")]
    StepRejected(String),
}
