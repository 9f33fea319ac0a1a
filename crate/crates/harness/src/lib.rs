//! Monte Carlo experiment harness: seeded replications of bandit agents on
//! fixed instances, per-snapshot regret metrics, deterministic aggregation,
//! and CSV output.

pub mod config;
pub mod error;
pub mod instances;
pub mod metrics;
pub mod runner;

pub use config::{
    AgentSpec, EpsModeSpec, ExperimentConfig, InstanceSource, MetricsFlags, SnapshotSpec,
};
pub use error::{ConfigError, RunError};
pub use instances::{generate_instances, snapshot_grid};
pub use metrics::{fmt_sig9, MetricsRow, MetricsTable, CSV_HEADER};
pub use runner::{
    build_instances, build_snapshots, replication_seed, run_experiment, run_replication,
    SnapshotRecord,
};
