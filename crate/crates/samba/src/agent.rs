//! The SAMBA policy behind the shared agent contract.

use bandit_core::{Agent, AgentError, ProbVector, RngStream};

use crate::error::SambaError;
use crate::schedule::Schedule;
use crate::state::{leading_arm, samba_select, samba_update, SambaState};

/// A SAMBA agent: a simplex state plus a learning-rate schedule.
///
/// `select` fixes the leading arm for the step (with uniform random
/// tie-breaking) and samples the played arm from the state; `update` applies
/// the stochastic-approximation step for that leader.
pub struct SambaAgent {
    state: SambaState,
    schedule: Schedule,
    pending_leader: Option<usize>,
    floor: Option<f64>,
}

impl SambaAgent {
    /// Uniformly initialized agent.
    pub fn new(n_arms: usize, schedule: Schedule) -> Result<Self, SambaError> {
        Ok(Self {
            state: SambaState::uniform(n_arms)?,
            schedule,
            pending_leader: None,
            floor: None,
        })
    }

    /// Agent with an explicit initial state.
    pub fn with_state(state: SambaState, schedule: Schedule) -> Self {
        Self {
            state,
            schedule,
            pending_leader: None,
            floor: None,
        }
    }

    /// Enables the optional probability floor. Positivity of the state is
    /// structural, but on horizons far beyond 1e8 steps double-precision
    /// entries can underflow; the floor lifts any entry below it after each
    /// update, with the largest entry absorbing the compensation.
    pub fn with_floor(mut self, floor: f64) -> Result<Self, SambaError> {
        let n = self.state.n_arms() as f64;
        if !(floor > 0.0 && floor < 1.0 / n) {
            return Err(SambaError::FloorOutOfRange(floor));
        }
        self.floor = Some(floor);
        Ok(self)
    }

    pub fn state(&self) -> &SambaState {
        &self.state
    }

    pub fn schedule(&self) -> &Schedule {
        &self.schedule
    }

    fn apply_floor(&mut self, floor: f64) -> Result<(), SambaError> {
        let p = self.state.probs().as_slice();
        if p.iter().all(|&v| v >= floor) {
            return Ok(());
        }
        let mut next = p.to_vec();
        let mut lifted = 0.0;
        for v in next.iter_mut() {
            if *v < floor {
                lifted += floor - *v;
                *v = floor;
            }
        }
        let top = next
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .unwrap();
        next[top] -= lifted;
        let probs = ProbVector::new(next).map_err(SambaError::Invariant)?;
        self.state = SambaState::new(probs)?;
        Ok(())
    }
}

impl Agent for SambaAgent {
    fn n_arms(&self) -> usize {
        self.state.n_arms()
    }

    fn select(&mut self, rng: &mut RngStream) -> usize {
        self.pending_leader = Some(leading_arm(&self.state, rng));
        samba_select(&self.state, rng)
    }

    fn update(&mut self, played: usize, reward: u8) -> Result<(), AgentError> {
        let leader = self
            .pending_leader
            .take()
            .ok_or_else(|| AgentError::StepRejected("update called before select".into()))?;
        let next = samba_update(&self.state, &self.schedule, leader, played, reward)
            .map_err(|e| AgentError::StepRejected(e.to_string()))?;
        self.state = next;
        if let Some(floor) = self.floor {
            self.apply_floor(floor)
                .map_err(|e| AgentError::StepRejected(e.to_string()))?;
        }
        Ok(())
    }

    fn arm_probability(&self, arm: usize) -> Option<f64> {
        if arm < self.state.n_arms() {
            Some(self.state.probs()[arm])
        } else {
            None
        }
    }
}
