//! Thompson sampling with a uniform Beta(1, 1) prior per arm.

use bandit_core::{Agent, AgentError, RngStream};
use rand_distr::{Beta, Distribution};

use crate::common::argmax_lowest;
use crate::error::BaselineError;

/// Per-arm Beta posterior: `(successes + 1, failures + 1)`.
pub struct Thompson {
    params: Vec<(f64, f64)>,
}

impl Thompson {
    pub fn new(n_arms: usize) -> Result<Self, BaselineError> {
        if n_arms < 2 {
            return Err(BaselineError::TooFewArms(n_arms));
        }
        Ok(Self {
            params: vec![(1.0, 1.0); n_arms],
        })
    }

    pub fn params(&self) -> &[(f64, f64)] {
        &self.params
    }

    /// Posterior mean of an arm: `(1 + successes) / (2 + pulls)`.
    pub fn posterior_mean(&self, arm: usize) -> f64 {
        let (a, b) = self.params[arm];
        a / (a + b)
    }
}

impl Agent for Thompson {
    fn n_arms(&self) -> usize {
        self.params.len()
    }

    fn select(&mut self, rng: &mut RngStream) -> usize {
        let draws: Vec<f64> = self
            .params
            .iter()
            .map(|&(a, b)| Beta::new(a, b).expect("valid Beta parameters").sample(rng))
            .collect();
        argmax_lowest(&draws)
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        if played >= self.params.len() {
            return Err(AgentError::ArmOutOfRange {
                arm: played,
                n_arms: self.params.len(),
            });
        }
        if reward > 1 {
            return Err(AgentError::InvalidReward(reward));
        }
        let (a, b) = &mut self.params[played];
        *a += f64::from(reward);
        *b += f64::from(1 - reward);
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_updates() {
        let mut t = Thompson::new(2).unwrap();
        t.update(0, 1).unwrap();
        assert_eq!(t.params()[0], (2.0, 1.0));
        t.update(0, 0).unwrap();
        assert_eq!(t.params()[0], (2.0, 2.0));
        assert_eq!(t.params()[1], (1.0, 1.0));
    }

    #[test]
    fn posterior_mean_is_exact() {
        let mut t = Thompson::new(2).unwrap();
        let outcomes = [1, 1, 0, 1, 0, 0, 0, 1, 1, 1];
        let mut s = 0u32;
        for (n, &r) in outcomes.iter().enumerate() {
            t.update(0, r).unwrap();
            s += u32::from(r);
            let expect = (1.0 + f64::from(s)) / (2.0 + (n + 1) as f64);
            assert_eq!(t.posterior_mean(0), expect);
        }
    }

    #[test]
    fn select_prefers_dominant_posterior() {
        // Beta(1000,1) vs Beta(1,1000): a wrong pick has negligible probability
        let mut t = Thompson::new(2).unwrap();
        t.params[0] = (1000.0, 1.0);
        t.params[1] = (1.0, 1000.0);
        let mut rng = RngStream::from_seed(21);
        for _ in 0..200 {
            assert_eq!(t.select(&mut rng), 0);
        }
    }

    #[test]
    fn update_validation() {
        let mut t = Thompson::new(2).unwrap();
        assert!(t.update(2, 1).is_err());
        assert!(t.update(0, 3).is_err());
        assert!(Thompson::new(1).is_err());
    }
}
