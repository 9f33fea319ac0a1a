//! Fixed Bernoulli bandit instances and regret accounting.

use crate::agent::RewardSample;
use crate::error::BanditError;
use crate::rng::RngStream;

/// A fixed set of Bernoulli arms with derived optimal arm and gaps.
///
/// An instance is degenerate when the maximal mean is attained by more than
/// one arm. Degenerate instances still define rewards and per-step regret,
/// but the minimal gap is undefined and the numerical theory checks reject
/// them.
#[derive(Debug, Clone, PartialEq)]
pub struct BanditInstance {
    means: Vec<f64>,
    optimal_arm: usize,
    optimal_mean: f64,
    gaps: Vec<f64>,
    min_gap: Option<f64>,
}

impl BanditInstance {
    /// Builds an instance from raw arm means.
    pub fn new(means: Vec<f64>) -> Result<Self, BanditError> {
        if means.len() < 2 {
            return Err(BanditError::TooFewArms(means.len()));
        }
        for (index, &value) in means.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) || value.is_nan() {
                return Err(BanditError::MeanOutOfRange { index, value });
            }
        }
        let optimal_mean = means.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        // exact float comparison: a tie is a tie only if the bits agree on value
        let optimal_arm = means.iter().position(|&m| m == optimal_mean).unwrap();
        let ties = means.iter().filter(|&&m| m == optimal_mean).count();
        let gaps: Vec<f64> = means.iter().map(|&m| optimal_mean - m).collect();
        let min_gap = if ties > 1 {
            None
        } else {
            gaps.iter()
                .copied()
                .filter(|&g| g > 0.0)
                .fold(None, |acc: Option<f64>, g| {
                    Some(acc.map_or(g, |a| a.min(g)))
                })
        };
        Ok(Self {
            means,
            optimal_arm,
            optimal_mean,
            gaps,
            min_gap,
        })
    }

    pub fn n_arms(&self) -> usize {
        self.means.len()
    }

    pub fn means(&self) -> &[f64] {
        &self.means
    }

    pub fn mean(&self, arm: usize) -> f64 {
        self.means[arm]
    }

    /// The arm with the largest mean (smallest index on a tie).
    pub fn optimal_arm(&self) -> usize {
        self.optimal_arm
    }

    pub fn optimal_mean(&self) -> f64 {
        self.optimal_mean
    }

    /// Per-arm gaps to the optimal mean.
    pub fn gaps(&self) -> &[f64] {
        &self.gaps
    }

    /// The gap between the best and second-best mean; `None` when the
    /// maximum is not unique.
    pub fn min_gap(&self) -> Option<f64> {
        self.min_gap
    }

    pub fn is_degenerate(&self) -> bool {
        self.min_gap.is_none()
    }

    fn check_arm(&self, arm: usize) -> Result<(), BanditError> {
        if arm >= self.means.len() {
            return Err(BanditError::ArmOutOfRange {
                arm,
                n_arms: self.means.len(),
            });
        }
        Ok(())
    }

    /// Pulls `arm`, consuming one uniform draw from `rng`.
    pub fn sample_reward(
        &self,
        arm: usize,
        rng: &mut RngStream,
    ) -> Result<RewardSample, BanditError> {
        self.check_arm(arm)?;
        let reward = u8::from(rng.bernoulli(self.means[arm]));
        Ok(RewardSample { arm, reward })
    }

    /// The expected one-step regret of playing `arm`: the gap of the played
    /// arm. Summed over a trajectory this is the pseudo-regret, which agrees
    /// with the realized regret in expectation.
    pub fn per_step_pseudo_regret(&self, played: usize) -> Result<f64, BanditError> {
        self.check_arm(played)?;
        Ok(self.gaps[played])
    }
}
