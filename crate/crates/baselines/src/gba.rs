//! Gradient bandit algorithm: softmax over per-arm preferences, moved by a
//! reward-minus-baseline gradient step. The baseline is the running average
//! of all rewards received so far, initialized at zero.

use bandit_core::{Agent, AgentError, RngStream};

use crate::common::{sample_categorical, softmax};
use crate::error::BaselineError;

pub struct Gba {
    preferences: Vec<f64>,
    mean_reward: f64,
    step_count: u64,
    step_size: f64,
}

impl Gba {
    pub fn new(n_arms: usize, step_size: f64) -> Result<Self, BaselineError> {
        if n_arms < 2 {
            return Err(BaselineError::TooFewArms(n_arms));
        }
        if !(step_size > 0.0) {
            return Err(BaselineError::StepSizeOutOfRange(step_size));
        }
        Ok(Self {
            preferences: vec![0.0; n_arms],
            mean_reward: 0.0,
            step_count: 0,
            step_size,
        })
    }

    pub fn preferences(&self) -> &[f64] {
        &self.preferences
    }

    pub fn probabilities(&self) -> Vec<f64> {
        softmax(&self.preferences)
    }

    pub fn baseline(&self) -> f64 {
        self.mean_reward
    }
}

impl Agent for Gba {
    fn n_arms(&self) -> usize {
        self.preferences.len()
    }

    fn select(&mut self, rng: &mut RngStream) -> usize {
        sample_categorical(&self.probabilities(), rng)
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        let n = self.preferences.len();
        if played >= n {
            return Err(AgentError::ArmOutOfRange { arm: played, n_arms: n });
        }
        if reward > 1 {
            return Err(AgentError::InvalidReward(reward));
        }
        let r = f64::from(reward);
        let pi = self.probabilities();
        let advantage = r - self.mean_reward;
        for (a, h) in self.preferences.iter_mut().enumerate() {
            let indicator = if a == played { 1.0 } else { 0.0 };
            *h += self.step_size * advantage * (indicator - pi[a]);
        }
        self.step_count += 1;
        self.mean_reward += (r - self.mean_reward) / self.step_count as f64;
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
    fn gradient_step_example() {
        // H=(0,0), pi=(0.5,0.5), played 0, reward 1, baseline 0, step 0.1
        let mut gba = Gba::new(2, 0.1).unwrap();
        gba.update(0, 1).unwrap();
        assert!((gba.preferences()[0] - 0.05).abs() < 1e-15);
        assert!((gba.preferences()[1] + 0.05).abs() < 1e-15);
        // baseline becomes the running average of rewards
        assert_eq!(gba.baseline(), 1.0);
    }

    #[test]
    fn baseline_tracks_running_mean() {
        let mut gba = Gba::new(3, 0.1).unwrap();
        for &r in &[1u8, 0, 1, 1] {
            gba.update(0, r).unwrap();
        }
        assert!((gba.baseline() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn distribution_sums_to_one() {
        let mut gba = Gba::new(4, 0.1).unwrap();
        let mut rng = RngStream::from_seed(33);
        for _ in 0..1000 {
            let probs = gba.probabilities();
            assert!((probs.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            let a = gba.select(&mut rng);
            gba.update(a, u8::from(rng.bernoulli(0.6))).unwrap();
        }
    }

    #[test]
    fn construction_validation() {
        assert!(Gba::new(1, 0.1).is_err());
        assert!(Gba::new(3, 0.0).is_err());
        assert!(Gba::new(3, -0.1).is_err());
    }
}
