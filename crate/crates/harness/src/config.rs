//! Experiment configuration: JSON schema, agent specs, validation.

use bandit_core::{Agent, BanditInstance};
use baselines::{EpsGreedy, Exp3, Gba, Thompson, Ucb1};
use samba::{alpha_threshold, SambaAgent, ScheduleSpec};
use serde::{Deserialize, Serialize};

use crate::error::ConfigError;

/// Where the bandit instances come from: an explicit list of mean vectors,
/// or a seeded uniform generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum InstanceSource {
    Explicit {
        means: Vec<Vec<f64>>,
    },
    Generator {
        n_arms: usize,
        low: f64,
        high: f64,
        n_instances: usize,
    },
}

/// Exploration mode for the epsilon-greedy baseline (wire form).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum EpsModeSpec {
    Decaying,
    Fixed { eps: f64 },
}

/// One agent entry in the config.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum AgentSpec {
    Samba {
        schedule: ScheduleSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        floor: Option<f64>,
    },
    Thompson,
    Ucb1,
    Exp3,
    Gba {
        alpha: f64,
    },
    EpsGreedy {
        #[serde(flatten)]
        mode: EpsModeSpec,
    },
}

impl AgentSpec {
    /// Builds a fresh agent for one replication.
    pub fn build(&self, n_arms: usize) -> Result<Box<dyn Agent>, String> {
        match self {
            Self::Samba { schedule, floor } => {
                let schedule = schedule.build().map_err(|e| e.to_string())?;
                let mut agent = SambaAgent::new(n_arms, schedule).map_err(|e| e.to_string())?;
                if let Some(f) = floor {
                    agent = agent.with_floor(*f).map_err(|e| e.to_string())?;
                }
                Ok(Box::new(agent))
            }
            Self::Thompson => Ok(Box::new(Thompson::new(n_arms).map_err(|e| e.to_string())?)),
            Self::Ucb1 => Ok(Box::new(Ucb1::new(n_arms).map_err(|e| e.to_string())?)),
            Self::Exp3 => Ok(Box::new(Exp3::new(n_arms).map_err(|e| e.to_string())?)),
            Self::Gba { alpha } => {
                Ok(Box::new(Gba::new(n_arms, *alpha).map_err(|e| e.to_string())?))
            }
            Self::EpsGreedy { mode } => {
                let mode = match mode {
                    EpsModeSpec::Decaying => baselines::EpsMode::Decaying,
                    EpsModeSpec::Fixed { eps } => baselines::EpsMode::Fixed(*eps),
                };
                Ok(Box::new(EpsGreedy::new(n_arms, mode).map_err(|e| e.to_string())?))
            }
        }
    }

    /// Stable label used in CSV rows and file names.
    pub fn label(&self) -> String {
        match self {
            Self::Samba { schedule, .. } => format!("samba_{}", schedule.label()),
            Self::Thompson => "thompson".into(),
            Self::Ucb1 => "ucb1".into(),
            Self::Exp3 => "exp3".into(),
            Self::Gba { alpha } => format!("gba_a{alpha}"),
            Self::EpsGreedy { mode } => match mode {
                EpsModeSpec::Decaying => "eps_greedy_decaying".into(),
                EpsModeSpec::Fixed { eps } => format!("eps_greedy_e{eps}"),
            },
        }
    }
}

/// Snapshot grid: a count of log-spaced points, or explicit times.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SnapshotSpec {
    LogPoints(usize),
    Times(Vec<u64>),
}

impl Default for SnapshotSpec {
    fn default() -> Self {
        Self::LogPoints(21)
    }
}

/// Which metric columns are populated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct MetricsFlags {
    pub pseudo_regret: bool,
    pub realized_regret: bool,
    pub p_optimal: bool,
    pub p_suboptimal_play: bool,
}

impl Default for MetricsFlags {
    fn default() -> Self {
        Self {
            pseudo_regret: true,
            realized_regret: true,
            p_optimal: true,
            p_suboptimal_play: true,
        }
    }
}

/// A complete experiment description.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub schema: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub instances: InstanceSource,
    pub agents: Vec<AgentSpec>,
    pub horizon: u64,
    pub replications: u32,
    pub base_seed: u64,
    #[serde(default)]
    pub snapshots: SnapshotSpec,
    #[serde(default)]
    pub metrics: MetricsFlags,
}

impl ExperimentConfig {
    pub fn from_json(text: &str) -> Result<Self, ConfigError> {
        let config: Self = serde_json::from_str(text)?;
        config.validate()?;
        Ok(config)
    }

    /// Semantic validation beyond what serde enforces. Error messages name
    /// the offending key.
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.schema != 1 {
            return Err(ConfigError::Schema(self.schema));
        }
        if self.horizon == 0 {
            return Err(ConfigError::invalid("horizon", "must be at least 1"));
        }
        if self.replications == 0 {
            return Err(ConfigError::invalid("replications", "must be at least 1"));
        }
        match &self.instances {
            InstanceSource::Explicit { means } => {
                if means.is_empty() {
                    return Err(ConfigError::invalid(
                        "instances.means",
                        "needs at least one instance",
                    ));
                }
                for (i, m) in means.iter().enumerate() {
                    BanditInstance::new(m.clone()).map_err(|e| {
                        ConfigError::invalid(format!("instances.means[{i}]"), e.to_string())
                    })?;
                }
            }
            InstanceSource::Generator { n_arms, low, high, n_instances } => {
                if *n_arms < 2 {
                    return Err(ConfigError::invalid(
                        "instances.n_arms",
                        "needs at least 2 arms",
                    ));
                }
                if *n_instances == 0 {
                    return Err(ConfigError::invalid(
                        "instances.n_instances",
                        "needs at least one instance",
                    ));
                }
                if !(0.0 <= *low && low < high && *high <= 1.0) {
                    return Err(ConfigError::invalid(
                        "instances.low/high",
                        format!("needs 0 <= low < high <= 1, got [{low}, {high}]"),
                    ));
                }
            }
        }
        if self.agents.is_empty() {
            return Err(ConfigError::invalid("agents", "needs at least one agent"));
        }
        for (i, agent) in self.agents.iter().enumerate() {
            self.validate_agent(i, agent)?;
        }
        if let SnapshotSpec::Times(times) = &self.snapshots {
            let sorted = times.windows(2).all(|w| w[0] < w[1]);
            let in_range = times.iter().all(|&t| t >= 1 && t <= self.horizon);
            if times.is_empty() || !sorted || !in_range {
                return Err(ConfigError::invalid(
                    "snapshots.times",
                    "must be non-empty, strictly increasing, and within [1, horizon]",
                ));
            }
        }
        Ok(())
    }

    fn validate_agent(&self, index: usize, agent: &AgentSpec) -> Result<(), ConfigError> {
        let key = |suffix: &str| format!("agents[{index}]{suffix}");
        match agent {
            AgentSpec::Samba { schedule, floor } => {
                if let ScheduleSpec::Fixed { alpha } = schedule {
                    if !(*alpha > 0.0 && *alpha < 1.0) {
                        return Err(ConfigError::invalid(
                            key(".schedule.alpha"),
                            format!(
                                "fixed learning rate {alpha} is not admissible: it must lie in \
                                 (0, 1), and below the instance threshold delta / (r_star - delta) \
                                 to keep regret logarithmic"
                            ),
                        ));
                    }
                }
                schedule
                    .build()
                    .map_err(|e| ConfigError::invalid(key(".schedule"), e.to_string()))?;
                if let Some(f) = floor {
                    if !(f.is_finite() && *f > 0.0 && *f < 0.5) {
                        return Err(ConfigError::invalid(
                            key(".floor"),
                            format!("floor {f} must lie in (0, 0.5)"),
                        ));
                    }
                }
            }
            AgentSpec::Gba { alpha } => {
                if !(*alpha > 0.0) {
                    return Err(ConfigError::invalid(
                        key(".alpha"),
                        format!("gradient step size {alpha} must be positive"),
                    ));
                }
            }
            AgentSpec::EpsGreedy { mode: EpsModeSpec::Fixed { eps } } => {
                if !(0.0..=1.0).contains(eps) {
                    return Err(ConfigError::invalid(
                        key(".eps"),
                        format!("epsilon {eps} must lie in [0, 1]"),
                    ));
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Warnings for configurations that run but void the regret guarantee:
    /// a fixed SAMBA rate at or above the admissibility threshold of some
    /// instance.
    pub fn admissibility_warnings(&self, instances: &[BanditInstance]) -> Vec<String> {
        let mut warnings = Vec::new();
        for (ai, agent) in self.agents.iter().enumerate() {
            let AgentSpec::Samba { schedule: ScheduleSpec::Fixed { alpha }, .. } = agent else {
                continue;
            };
            for (ii, inst) in instances.iter().enumerate() {
                let Some(delta) = inst.min_gap() else { continue };
                let Ok(threshold) = alpha_threshold(inst.optimal_mean(), delta) else {
                    continue;
                };
                if *alpha >= threshold {
                    warnings.push(format!(
                        "agents[{ai}]: fixed alpha {alpha} is at or above the admissibility \
                         threshold {threshold:.6} of instance {ii}; the regret guarantee does \
                         not apply"
                    ));
                }
            }
        }
        warnings
    }
}
