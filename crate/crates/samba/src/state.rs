//! SAMBA's state on the probability simplex and its stochastic-approximation
//! update.
//!
//! The state is a probability vector over arms. Each step plays an arm drawn
//! from the state, observes a 0/1 reward, and moves every arm other than the
//! current *leading* arm (the argmax of the state) by
//!
//! ```text
//! p_a <- p_a + gamma(p_a) * [ 1{a played} * reward / p_a
//!                           - 1{leader played} * reward / p_leader ]
//! ```
//!
//! with `gamma(p) = alpha(p) * p^2`, after which the leading arm absorbs the
//! slack so the entries again sum to one. For `alpha < 1` every entry stays
//! strictly positive.

use bandit_core::{ProbVector, RngStream};

use crate::error::SambaError;
use crate::schedule::Schedule;

/// The algorithm state: a probability vector over at least two arms.
#[derive(Debug, Clone, PartialEq)]
pub struct SambaState {
    probs: ProbVector,
}

impl SambaState {
    pub fn new(probs: ProbVector) -> Result<Self, SambaError> {
        if probs.len() < 2 {
            return Err(SambaError::TooFewArms(probs.len()));
        }
        Ok(Self { probs })
    }

    /// Uniform initial state `(1/n, ..., 1/n)`, the default initialization.
    pub fn uniform(n: usize) -> Result<Self, SambaError> {
        let probs = ProbVector::uniform(n).map_err(SambaError::Invariant)?;
        Self::new(probs)
    }

    pub fn n_arms(&self) -> usize {
        self.probs.len()
    }

    pub fn probs(&self) -> &ProbVector {
        &self.probs
    }
}

/// The arm with the largest probability. Ties (by exact floating-point
/// equality) are broken uniformly at random.
pub fn leading_arm(state: &SambaState, rng: &mut RngStream) -> usize {
    let p = state.probs().as_slice();
    let max = p.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let ties = p.iter().filter(|&&v| v == max).count();
    if ties == 1 {
        return p.iter().position(|&v| v == max).unwrap();
    }
    let pick = rng.index(ties);
    p.iter()
        .enumerate()
        .filter(|(_, &v)| v == max)
        .nth(pick)
        .map(|(a, _)| a)
        .unwrap()
}

/// Samples an arm from the categorical distribution given by the state.
pub fn samba_select(state: &SambaState, rng: &mut RngStream) -> usize {
    let p = state.probs().as_slice();
    let u = rng.uniform();
    let mut acc = 0.0;
    for (a, &pa) in p.iter().enumerate() {
        acc += pa;
        if u < acc {
            return a;
        }
    }
    // numerical tail: the cumulative sum fell just short of 1
    p.len() - 1
}

/// Applies one stochastic-approximation step and returns the new state.
///
/// `leader` must be the leading arm of `state` (as returned by
/// [`leading_arm`]); `played` is the arm that was pulled and `reward` its
/// 0/1 outcome. Rejects schedules that yield `alpha(p_a) >= 1` for an
/// updated arm, since those can push an entry to zero or below.
pub fn samba_update(
    state: &SambaState,
    schedule: &Schedule,
    leader: usize,
    played: usize,
    reward: u8,
) -> Result<SambaState, SambaError> {
    let n = state.n_arms();
    if leader >= n {
        return Err(SambaError::ArmOutOfRange { arm: leader, n_arms: n });
    }
    if played >= n {
        return Err(SambaError::ArmOutOfRange { arm: played, n_arms: n });
    }
    if reward > 1 {
        return Err(SambaError::InvalidReward(reward));
    }
    let p = state.probs().as_slice();
    debug_assert!(
        p.iter().all(|&v| v <= p[leader]),
        "leader must be an argmax of the state"
    );
    if reward == 0 {
        // both importance-sampling terms vanish
        return Ok(state.clone());
    }

    let mut next = p.to_vec();
    if played == leader {
        // every non-leading arm is pushed down by gamma(p_a) / p_leader
        let p_leader = p[leader];
        for (a, slot) in next.iter_mut().enumerate() {
            if a == leader {
                continue;
            }
            let pa = p[a];
            if pa == 0.0 {
                continue; // a zero entry is a fixed point of the update
            }
            let alpha = schedule.alpha(pa)?;
            if alpha >= 1.0 {
                return Err(SambaError::AlphaGuard { arm: a, p: pa, alpha });
            }
            *slot = pa - alpha * pa * pa / p_leader;
        }
    } else {
        // only the played arm moves, up by gamma(p_a)/p_a = alpha(p_a) * p_a
        let pa = p[played];
        if pa > 0.0 {
            let alpha = schedule.alpha(pa)?;
            if alpha >= 1.0 {
                return Err(SambaError::AlphaGuard { arm: played, p: pa, alpha });
            }
            next[played] = pa + alpha * pa;
        }
    }
    let others: f64 = next
        .iter()
        .enumerate()
        .filter(|&(a, _)| a != leader)
        .map(|(_, &v)| v)
        .sum();
    next[leader] = 1.0 - others;

    let probs = ProbVector::new(next).map_err(SambaError::Invariant)?;
    SambaState::new(probs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schedule::{Schedule, SlowlyVarying};
    use std::sync::Arc;

    fn state(probs: &[f64]) -> SambaState {
        SambaState::new(ProbVector::new(probs.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn leading_arm_unique_argmax() {
        let mut rng = RngStream::from_seed(1);
        assert_eq!(leading_arm(&state(&[0.2, 0.5, 0.3]), &mut rng), 1);
        assert_eq!(leading_arm(&state(&[1.0, 0.0]), &mut rng), 0);
    }

    #[test]
    fn leading_arm_breaks_ties_uniformly() {
        let s = state(&[0.5, 0.5]);
        let mut rng = RngStream::from_seed(77);
        let n = 20_000;
        let zeros = (0..n).filter(|_| leading_arm(&s, &mut rng) == 0).count();
        let freq = zeros as f64 / n as f64;
        let tol = 3.0 * (0.25f64 / n as f64).sqrt();
        assert!((freq - 0.5).abs() < tol, "tie frequency {freq}");
    }

    #[test]
    fn select_degenerate_and_statistical() {
        let mut rng = RngStream::from_seed(5);
        let sure = state(&[1.0, 0.0]);
        for _ in 0..100 {
            assert_eq!(samba_select(&sure, &mut rng), 0);
        }
        let fair = state(&[0.5, 0.5]);
        let n = 100_000;
        let zeros = (0..n).filter(|_| samba_select(&fair, &mut rng) == 0).count();
        let freq = zeros as f64 / n as f64;
        let tol = 3.0 * (0.25f64 / n as f64).sqrt();
        assert!((freq - 0.5).abs() < tol, "selection frequency {freq}");
    }

    #[test]
    fn select_replays_with_fixed_seed() {
        let s = state(&[0.3, 0.3, 0.4]);
        let draw = |seed: u64| -> Vec<usize> {
            let mut rng = RngStream::from_seed(seed);
            (0..200).map(|_| samba_select(&s, &mut rng)).collect()
        };
        assert_eq!(draw(99), draw(99));
    }

    #[test]
    fn update_played_non_leader() {
        // p=(0.6,0.4), fixed alpha=0.1, leader 0, played 1, reward 1
        let s = state(&[0.6, 0.4]);
        let sched = Schedule::fixed(0.1).unwrap();
        let next = samba_update(&s, &sched, 0, 1, 1).unwrap();
        assert!((next.probs()[1] - 0.44).abs() < 1e-15);
        assert!((next.probs()[0] - 0.56).abs() < 1e-15);
    }

    #[test]
    fn update_played_leader() {
        // p=(0.6,0.4), fixed alpha=0.1, leader 0, played 0, reward 1
        let s = state(&[0.6, 0.4]);
        let sched = Schedule::fixed(0.1).unwrap();
        let next = samba_update(&s, &sched, 0, 0, 1).unwrap();
        let expect1 = 0.4 - 0.1 * 0.16 / 0.6;
        assert!((next.probs()[1] - expect1).abs() < 1e-15);
        assert!((next.probs()[0] - (1.0 - expect1)).abs() < 1e-15);
    }

    #[test]
    fn update_zero_reward_is_identity() {
        let s = state(&[0.25, 0.35, 0.4]);
        let sched = Schedule::fixed(0.3).unwrap();
        for played in 0..3 {
            let next = samba_update(&s, &sched, 2, played, 0).unwrap();
            assert_eq!(next.probs().as_slice(), s.probs().as_slice());
        }
    }

    #[test]
    fn update_played_non_leader_is_exact_multiplicative() {
        // a played non-leading arm with reward 1 grows by exactly alpha * p
        let sched = Schedule::fixed(0.1).unwrap();
        for &p1 in &[0.1, 0.2, 0.3, 0.45] {
            let s = state(&[1.0 - p1, p1]);
            let next = samba_update(&s, &sched, 0, 1, 1).unwrap();
            assert_eq!(next.probs()[1], p1 + 0.1 * p1);
            let rel = (next.probs()[1] - 1.1 * p1).abs() / (1.1 * p1);
            assert!(rel <= f64::EPSILON);
        }
    }

    #[test]
    fn update_rejects_alpha_at_least_one() {
        // beta = 1.7 gives alpha(0.5) = 1.7 / (1 - ln 0.5) > 1
        let sched = Schedule::log_cooling_unvalidated(1.7).unwrap();
        let s = state(&[0.5, 0.5]);
        let err = samba_update(&s, &sched, 0, 1, 1).unwrap_err();
        assert!(matches!(err, SambaError::AlphaGuard { arm: 1, .. }), "{err}");
    }

    #[test]
    fn update_index_and_reward_validation() {
        let s = state(&[0.5, 0.5]);
        let sched = Schedule::fixed(0.1).unwrap();
        assert!(matches!(
            samba_update(&s, &sched, 2, 0, 1),
            Err(SambaError::ArmOutOfRange { arm: 2, .. })
        ));
        assert!(matches!(
            samba_update(&s, &sched, 0, 5, 1),
            Err(SambaError::ArmOutOfRange { arm: 5, .. })
        ));
        assert!(matches!(
            samba_update(&s, &sched, 0, 0, 2),
            Err(SambaError::InvalidReward(2))
        ));
    }

    #[test]
    fn zero_entries_stay_zero() {
        let s = state(&[0.7, 0.3, 0.0]);
        let sched = Schedule::fixed(0.2).unwrap();
        let next = samba_update(&s, &sched, 0, 0, 1).unwrap();
        assert_eq!(next.probs()[2], 0.0);
        let next = samba_update(&s, &sched, 0, 2, 1).unwrap();
        assert_eq!(next.probs().as_slice(), s.probs().as_slice());
    }

    #[test]
    fn one_step_drift_matches_closed_form() {
        // exact enumeration over (arm, reward) outcomes when the best arm
        // leads: E[dq] = sum over suboptimal arms of gamma(p_a)(r_a - r_best)
        let s = state(&[0.5, 0.3, 0.2]);
        let rewards = [0.9, 0.6, 0.4];
        let sched = Schedule::fixed(0.2).unwrap();
        let q = |st: &SambaState| 1.0 - st.probs()[0];
        let mut drift = 0.0;
        for a in 0..3 {
            let next = samba_update(&s, &sched, 0, a, 1).unwrap();
            drift += s.probs()[a] * rewards[a] * (q(&next) - q(&s));
        }
        let closed: f64 = (1..3)
            .map(|a| {
                let pa = s.probs()[a];
                0.2 * pa * pa * (rewards[a] - rewards[0])
            })
            .sum();
        assert!((drift - closed).abs() < 1e-15, "{drift} vs {closed}");
    }

    #[test]
    fn slowly_varying_schedule_updates() {
        let l = SlowlyVarying::Custom(Arc::new(|_| 1.0));
        let sched = Schedule::from_slowly_varying(l, 1e-12).unwrap();
        // gamma(p) = p^2/2, so a played non-leader grows by p/2
        let s = state(&[0.6, 0.4]);
        let next = samba_update(&s, &sched, 0, 1, 1).unwrap();
        assert!((next.probs()[1] - 0.6).abs() < 1e-10);
    }
}
