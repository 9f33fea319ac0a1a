//! UCB1: optimism via a `sqrt(2 ln t / n_a)` confidence bonus.

use bandit_core::{Agent, AgentError, RngStream};

use crate::error::BaselineError;

pub struct Ucb1 {
    counts: Vec<u64>,
    reward_sums: Vec<f64>,
    t: u64,
}

impl Ucb1 {
    pub fn new(n_arms: usize) -> Result<Self, BaselineError> {
        if n_arms < 2 {
            return Err(BaselineError::TooFewArms(n_arms));
        }
        Ok(Self {
            counts: vec![0; n_arms],
            reward_sums: vec![0.0; n_arms],
            t: 0,
        })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn mean(&self, arm: usize) -> f64 {
        if self.counts[arm] == 0 {
            0.0
        } else {
            self.reward_sums[arm] / self.counts[arm] as f64
        }
    }

    /// The UCB index of an arm given its empirical mean, pull count, and the
    /// total number of plays so far.
    pub(crate) fn index(mean: f64, count: u64, t: u64) -> f64 {
        mean + (2.0 * (t as f64).ln() / count as f64).sqrt()
    }
}

impl Agent for Ucb1 {
    fn n_arms(&self) -> usize {
        self.counts.len()
    }

    fn select(&mut self, _rng: &mut RngStream) -> usize {
        if let Some(unplayed) = self.counts.iter().position(|&c| c == 0) {
            return unplayed;
        }
        let mut best = 0;
        let mut best_index = f64::NEG_INFINITY;
        for a in 0..self.counts.len() {
            let idx = Self::index(self.mean(a), self.counts[a], self.t);
            if idx > best_index {
                best_index = idx;
                best = a;
            }
        }
        best
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        if played >= self.counts.len() {
            return Err(AgentError::ArmOutOfRange {
                arm: played,
                n_arms: self.counts.len(),
            });
        }
        if reward > 1 {
            return Err(AgentError::InvalidReward(reward));
        }
        self.counts[played] += 1;
        self.reward_sums[played] += f64::from(reward);
        self.t += 1;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_formula() {
        // means (1, 0), one pull each, t = 2
        let i0 = Ucb1::index(1.0, 1, 2);
        let i1 = Ucb1::index(0.0, 1, 2);
        assert!((i0 - 2.17741).abs() < 1e-5, "{i0}");
        assert!((i1 - 1.17741).abs() < 1e-5, "{i1}");
        assert!(i0 > i1);
    }

    #[test]
    fn plays_each_arm_once_first() {
        let n = 5;
        let mut agent = Ucb1::new(n).unwrap();
        let mut rng = RngStream::from_seed(0);
        for expect in 0..n {
            let a = agent.select(&mut rng);
            assert_eq!(a, expect);
            agent.update(a, 1).unwrap();
        }
    }

    #[test]
    fn picks_higher_index_after_warmup() {
        let mut agent = Ucb1::new(2).unwrap();
        let mut rng = RngStream::from_seed(0);
        agent.update(0, 1).unwrap();
        agent.update(1, 0).unwrap();
        assert_eq!(agent.select(&mut rng), 0);
    }

    #[test]
    fn running_mean() {
        let mut agent = Ucb1::new(2).unwrap();
        agent.update(0, 1).unwrap();
        agent.update(0, 0).unwrap();
        assert_eq!(agent.mean(0), 0.5);
    }
}
