use thiserror::Error;

/// Configuration errors. The message names the offending key.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema version {0}; this build reads schema 1")]
    Schema(u32),
    #[error("{key}: {message}")]
    Invalid { key: String, message: String },
}

impl ConfigError {
    pub fn invalid(key: impl Into<String>, message: impl Into<String>) -> Self {
        Self::Invalid {
            key: key.into(),
            message: message.into(),
        }
    }
}

/// Runtime errors while executing an experiment.
#[derive(Debug, Error)]
pub enum RunError {
    #[error("horizon must be at least 1")]
    ZeroHorizon,
    #[error("replications must be at least 1")]
    ZeroReplications,
    #[error(transparent)]
    Bandit(#[from] bandit_core::BanditError),
    #[error(transparent)]
    Agent(#[from] bandit_core::AgentError),
    #[error("agent construction failed: {0}")]
    AgentBuild(String),
    #[error("instance generation needs 0 <= low < high <= 1, got [{low}, {high}]")]
    BadRange { low: f64, high: f64 },
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
