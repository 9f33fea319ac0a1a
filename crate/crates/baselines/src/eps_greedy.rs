//! Epsilon-greedy with fixed or decaying exploration.

use bandit_core::{Agent, AgentError, RngStream};

use crate::common::argmax_lowest;
use crate::error::BaselineError;

/// Exploration mode: a fixed rate, or the decaying rate `min(1, 100/t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EpsMode {
    Fixed(f64),
    Decaying,
}

pub struct EpsGreedy {
    means: Vec<f64>,
    counts: Vec<u64>,
    /// 1-based time index of the next decision; advanced on update.
    t: u64,
    mode: EpsMode,
}

impl EpsGreedy {
    pub fn new(n_arms: usize, mode: EpsMode) -> Result<Self, BaselineError> {
        if n_arms < 2 {
            return Err(BaselineError::TooFewArms(n_arms));
        }
        if let EpsMode::Fixed(eps) = mode {
            if !(0.0..=1.0).contains(&eps) {
                return Err(BaselineError::EpsOutOfRange(eps));
            }
        }
        Ok(Self {
            means: vec![0.0; n_arms],
            counts: vec![0; n_arms],
            t: 1,
            mode,
        })
    }

    /// The exploration probability at 1-based time `t`.
    pub fn epsilon_at(mode: EpsMode, t: u64) -> f64 {
        match mode {
            EpsMode::Fixed(eps) => eps,
            EpsMode::Decaying => (100.0 / t as f64).min(1.0),
        }
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }
}

impl Agent for EpsGreedy {
    fn n_arms(&self) -> usize {
        self.means.len()
    }

    fn select(&mut self, rng: &mut RngStream) -> usize {
        let eps = Self::epsilon_at(self.mode, self.t);
        if rng.bernoulli(eps) {
            rng.index(self.means.len())
        } else {
            argmax_lowest(&self.means)
        }
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        if played >= self.means.len() {
            return Err(AgentError::ArmOutOfRange {
                arm: played,
                n_arms: self.means.len(),
            });
        }
        if reward > 1 {
            return Err(AgentError::InvalidReward(reward));
        }
        self.counts[played] += 1;
        self.means[played] += (f64::from(reward) - self.means[played]) / self.counts[played] as f64;
        self.t += 1;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decaying_epsilon_values() {
        assert_eq!(EpsGreedy::epsilon_at(EpsMode::Decaying, 1), 1.0);
        assert_eq!(EpsGreedy::epsilon_at(EpsMode::Decaying, 100), 1.0);
        assert_eq!(EpsGreedy::epsilon_at(EpsMode::Decaying, 200), 0.5);
        assert_eq!(EpsGreedy::epsilon_at(EpsMode::Decaying, 1000), 0.1);
    }

    #[test]
    fn zero_eps_is_pure_greedy() {
        let mut agent = EpsGreedy::new(2, EpsMode::Fixed(0.0)).unwrap();
        agent.means = vec![0.2, 0.8];
        let mut rng = RngStream::from_seed(4);
        for _ in 0..100 {
            assert_eq!(agent.select(&mut rng), 1);
        }
    }

    #[test]
    fn greedy_breaks_ties_to_lowest_index() {
        let mut agent = EpsGreedy::new(3, EpsMode::Fixed(0.0)).unwrap();
        let mut rng = RngStream::from_seed(4);
        assert_eq!(agent.select(&mut rng), 0);
    }

    #[test]
    fn incremental_mean() {
        let mut agent = EpsGreedy::new(2, EpsMode::Fixed(0.1)).unwrap();
        agent.update(0, 1).unwrap();
        agent.update(0, 0).unwrap();
        agent.update(0, 0).unwrap();
        assert!((agent.means()[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn construction_validation() {
        assert!(EpsGreedy::new(1, EpsMode::Decaying).is_err());
        assert!(EpsGreedy::new(2, EpsMode::Fixed(1.5)).is_err());
        assert!(EpsGreedy::new(2, EpsMode::Fixed(-0.1)).is_err());
        assert!(EpsGreedy::new(2, EpsMode::Fixed(1.0)).is_ok());
    }

    #[test]
    fn decaying_explores_uniformly_at_start() {
        // eps = 1 for t <= 100: the first selections are uniform draws
        let mut agent = EpsGreedy::new(4, EpsMode::Decaying).unwrap();
        let mut rng = RngStream::from_seed(17);
        let mut hits = [0usize; 4];
        for _ in 0..4000 {
            hits[agent.select(&mut rng)] += 1;
        }
        for &h in &hits {
            assert!(h > 800, "exploration skewed: {hits:?}");
        }
    }
}
