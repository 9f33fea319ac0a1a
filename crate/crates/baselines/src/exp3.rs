//! Anytime gain-based Exp3 with a time-decaying rate.
//!
//! Arms are drawn proportionally to `exp(eta_t * G_a)` where `G_a` is the
//! importance-weighted cumulative gain estimate and
//! `eta_t = sqrt(ln N / (t N))` is recomputed each step.

use bandit_core::{Agent, AgentError, RngStream};

use crate::common::{sample_categorical, softmax};
use crate::error::BaselineError;

/// `eta_t = sqrt(ln(n_arms) / (t * n_arms))`, natural logarithm.
pub fn exp3_eta(n_arms: usize, t: u64) -> Result<f64, BaselineError> {
    if n_arms < 2 {
        return Err(BaselineError::TooFewArms(n_arms));
    }
    if t == 0 {
        return Err(BaselineError::InvalidTime(t));
    }
    Ok(((n_arms as f64).ln() / (t as f64 * n_arms as f64)).sqrt())
}

pub struct Exp3 {
    gains: Vec<f64>,
    t: u64,
}

impl Exp3 {
    pub fn new(n_arms: usize) -> Result<Self, BaselineError> {
        if n_arms < 2 {
            return Err(BaselineError::TooFewArms(n_arms));
        }
        Ok(Self {
            gains: vec![0.0; n_arms],
            t: 1,
        })
    }

    /// The selection distribution for the current step.
    pub fn probabilities(&self) -> Vec<f64> {
        let eta = exp3_eta(self.gains.len(), self.t).expect("state keeps t >= 1");
        let scores: Vec<f64> = self.gains.iter().map(|&g| eta * g).collect();
        softmax(&scores)
    }

    pub fn gains(&self) -> &[f64] {
        &self.gains
    }
}

impl Agent for Exp3 {
    fn n_arms(&self) -> usize {
        self.gains.len()
    }

    fn select(&mut self, rng: &mut RngStream) -> usize {
        sample_categorical(&self.probabilities(), rng)
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        if played >= self.gains.len() {
            return Err(AgentError::ArmOutOfRange {
                arm: played,
                n_arms: self.gains.len(),
            });
        }
        if reward > 1 {
            return Err(AgentError::InvalidReward(reward));
        }
        // importance weighting uses the same distribution the arm was drawn
        // from: t is only advanced afterwards
        let p = self.probabilities()[played];
        self.gains[played] += f64::from(reward) / p;
        self.t += 1;
        Ok(())
    }

    fn arm_probability(&self, arm: usize) -> Option<f64> {
        self.probabilities().get(arm).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eta_examples() {
        assert!((exp3_eta(4, 1).unwrap() - 0.588705).abs() < 1e-6);
        assert!((exp3_eta(4, 4).unwrap() - 0.294352).abs() < 1e-6);
        assert_eq!(exp3_eta(4, 0), Err(BaselineError::InvalidTime(0)));
        assert_eq!(exp3_eta(1, 1), Err(BaselineError::TooFewArms(1)));
    }

    #[test]
    fn eta_halves_when_t_quadruples() {
        let e1 = exp3_eta(7, 3).unwrap();
        let e4 = exp3_eta(7, 12).unwrap();
        assert!((e1 / e4 - 2.0).abs() < 1e-12);
    }

    #[test]
    fn initial_distribution_is_uniform() {
        let agent = Exp3::new(4).unwrap();
        for p in agent.probabilities() {
            assert!((p - 0.25).abs() < 1e-15);
        }
    }

    #[test]
    fn importance_weighted_gain() {
        let mut agent = Exp3::new(4).unwrap();
        // uniform distribution at t=1, so P(played) = 1/4 exactly
        agent.update(0, 1).unwrap();
        assert_eq!(agent.gains()[0], 4.0);
        assert_eq!(agent.gains()[1], 0.0);
    }

    #[test]
    fn distribution_sums_to_one_along_a_run() {
        let mut agent = Exp3::new(3).unwrap();
        let mut rng = RngStream::from_seed(8);
        for _ in 0..2000 {
            let probs = agent.probabilities();
            assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            let a = agent.select(&mut rng);
            agent.update(a, u8::from(rng.bernoulli(0.4))).unwrap();
        }
    }
}
