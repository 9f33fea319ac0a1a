//! The select/update contract every bandit algorithm implements.

use crate::error::AgentError;
use crate::rng::RngStream;

/// One pull: the arm played and its 0/1 reward.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RewardSample {
    pub arm: usize,
    pub reward: u8,
}

/// A bandit policy. One agent instance is owned by one replication; the
/// runner drives the `select -> reward -> update` loop.
pub trait Agent {
    fn n_arms(&self) -> usize;

    /// Chooses the arm to play, drawing any required randomness from `rng`.
    fn select(&mut self, rng: &mut RngStream) -> usize;

    /// Incorporates the observed reward for the arm just played.
    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError>;

    /// The probability the policy currently assigns to `arm`, for policies
    /// that maintain explicit arm probabilities. `None` otherwise.
    fn arm_probability(&self, arm: usize) -> Option<f64> {
        let _ = arm;
        None
    }
}
