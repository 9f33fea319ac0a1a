//! Probability vectors on the simplex.

use crate::error::BanditError;

/// Absolute tolerance on the simplex normalization constraint.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A probability vector over arms: non-negative entries summing to 1 within
/// [`SUM_TOLERANCE`].
#[derive(Debug, Clone, PartialEq)]
pub struct ProbVector {
    probs: Vec<f64>,
}

impl ProbVector {
    /// Validates and wraps a raw vector of probabilities.
    pub fn new(probs: Vec<f64>) -> Result<Self, BanditError> {
        for (index, &value) in probs.iter().enumerate() {
            if !(value >= 0.0) {
                return Err(BanditError::NegativeProbability { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(BanditError::NotNormalized {
                sum,
                tol: SUM_TOLERANCE,
            });
        }
        Ok(Self { probs })
    }

    /// The uniform vector `(1/n, ..., 1/n)`. Needs `n >= 2`.
    pub fn uniform(n: usize) -> Result<Self, BanditError> {
        if n < 2 {
            return Err(BanditError::TooFewEntries(n));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.probs
    }

    pub fn sum(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn min(&self) -> f64 {
        self.probs.iter().copied().fold(f64::INFINITY, f64::min)
    }
}

impl std::ops::Index<usize> for ProbVector {
    type Output = f64;

    fn index(&self, i: usize) -> &f64 {
        &self.probs[i]
    }
}
