//! The replication loop and the deterministic experiment runner.
//!
//! Replications are embarrassingly parallel: each owns its agent and RNG
//! stream, seeded by hashing (base seed, agent index, instance index, run
//! index). Results are collected by run index and reduced sequentially, so
//! the output does not depend on scheduling.

use bandit_core::{derive_seed, BanditInstance, RngStream};
use rayon::prelude::*;

use crate::config::{AgentSpec, ExperimentConfig, InstanceSource, SnapshotSpec};
use crate::error::RunError;
use crate::instances::{generate_instances, snapshot_grid};
use crate::metrics::{MetricsRow, MetricsTable};

/// Per-snapshot observations of a single replication.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotRecord {
    pub t: u64,
    pub cumulative_pseudo_regret: f64,
    pub cumulative_realized_regret: f64,
    /// Probability the policy assigned to the optimal arm when step `t` was
    /// played, for policies that expose one.
    pub p_optimal: Option<f64>,
    /// Whether the arm played at `t` differs from the optimal arm.
    pub played_suboptimal: bool,
}

/// Runs one replication of `spec` on `instance` for `horizon` steps,
/// recording at each snapshot time. Snapshot times must be sorted, within
/// `[1, horizon]`.
pub fn run_replication(
    instance: &BanditInstance,
    spec: &AgentSpec,
    horizon: u64,
    seed: u64,
    snapshots: &[u64],
) -> Result<Vec<SnapshotRecord>, RunError> {
    if horizon == 0 {
        return Err(RunError::ZeroHorizon);
    }
    let mut agent = spec
        .build(instance.n_arms())
        .map_err(RunError::AgentBuild)?;
    let mut rng = RngStream::from_seed(seed);
    let optimal = instance.optimal_arm();

    let mut records = Vec::with_capacity(snapshots.len());
    let mut next_snapshot = snapshots.iter().copied().peekable();
    let mut cumulative_pseudo = 0.0;
    let mut cumulative_realized = 0.0;
    for t in 1..=horizon {
        // the probability with which step t's arm is about to be drawn
        let p_optimal = agent.arm_probability(optimal);
        let played = agent.select(&mut rng);
        let sample = instance.sample_reward(played, &mut rng)?;
        cumulative_pseudo += instance.gaps()[played];
        cumulative_realized += instance.optimal_mean() - f64::from(sample.reward);
        agent.update(played, sample.reward)?;
        if next_snapshot.peek() == Some(&t) {
            next_snapshot.next();
            records.push(SnapshotRecord {
                t,
                cumulative_pseudo_regret: cumulative_pseudo,
                cumulative_realized_regret: cumulative_realized,
                p_optimal,
                played_suboptimal: played != optimal,
            });
        }
    }
    Ok(records)
}

/// Materializes the instance list of a config. Generated instances derive
/// their seed from the base seed, so the set is fixed once per config.
pub fn build_instances(config: &ExperimentConfig) -> Result<Vec<BanditInstance>, RunError> {
    match &config.instances {
        InstanceSource::Explicit { means } => means
            .iter()
            .map(|m| BanditInstance::new(m.clone()).map_err(RunError::from))
            .collect(),
        InstanceSource::Generator { n_arms, low, high, n_instances } => {
            let seed = derive_seed(config.base_seed, &[u64::MAX]);
            generate_instances(*n_arms, *low, *high, *n_instances, seed)
        }
    }
}

/// The snapshot times of a config.
pub fn build_snapshots(config: &ExperimentConfig) -> Vec<u64> {
    match &config.snapshots {
        SnapshotSpec::LogPoints(n) => snapshot_grid(config.horizon, (*n).max(1)),
        SnapshotSpec::Times(times) => times.clone(),
    }
}

/// The seed of one replication, mixed from the base seed and the run
/// coordinates. Independent of the total replication count.
pub fn replication_seed(base_seed: u64, agent: usize, instance: usize, run: u32) -> u64 {
    derive_seed(base_seed, &[agent as u64, instance as u64, u64::from(run)])
}

/// Runs the full experiment: every agent on every instance, `replications`
/// runs each, aggregated into a [`MetricsTable`] whose content is
/// independent of execution order and parallelism.
pub fn run_experiment(config: &ExperimentConfig) -> Result<MetricsTable, RunError> {
    if config.replications == 0 {
        return Err(RunError::ZeroReplications);
    }
    let instances = build_instances(config)?;
    let snapshots = build_snapshots(config);
    let runs = config.replications;

    let mut table = MetricsTable::default();
    for (agent_index, spec) in config.agents.iter().enumerate() {
        let label = spec.label();
        for (instance_index, instance) in instances.iter().enumerate() {
            // parallel map over run indices; collect preserves index order
            let results: Vec<Result<Vec<SnapshotRecord>, RunError>> = (0..runs)
                .into_par_iter()
                .map(|run| {
                    let seed = replication_seed(config.base_seed, agent_index, instance_index, run);
                    run_replication(instance, spec, config.horizon, seed, &snapshots)
                })
                .collect();
            let mut replications = Vec::with_capacity(runs as usize);
            for result in results {
                replications.push(result?);
            }
            aggregate_rows(
                &mut table,
                &label,
                agent_index,
                instance_index,
                &snapshots,
                &replications,
            );
        }
    }
    Ok(table)
}

/// Sequential, run-index-ordered reduction of replication records into
/// per-snapshot rows.
fn aggregate_rows(
    table: &mut MetricsTable,
    label: &str,
    agent_index: usize,
    instance_index: usize,
    snapshots: &[u64],
    replications: &[Vec<SnapshotRecord>],
) {
    let runs = replications.len();
    for (si, &t) in snapshots.iter().enumerate() {
        let mut pseudo_sum = 0.0;
        let mut pseudo_sq = 0.0;
        let mut realized_sum = 0.0;
        let mut realized_sq = 0.0;
        let mut p_opt_sum = 0.0;
        let mut p_opt_count = 0usize;
        let mut suboptimal_count = 0u64;
        for rep in replications {
            let rec = &rep[si];
            debug_assert_eq!(rec.t, t);
            pseudo_sum += rec.cumulative_pseudo_regret;
            pseudo_sq += rec.cumulative_pseudo_regret * rec.cumulative_pseudo_regret;
            realized_sum += rec.cumulative_realized_regret;
            realized_sq += rec.cumulative_realized_regret * rec.cumulative_realized_regret;
            if let Some(p) = rec.p_optimal {
                p_opt_sum += p;
                p_opt_count += 1;
            }
            suboptimal_count += u64::from(rec.played_suboptimal);
        }
        let n = runs as f64;
        let pseudo_mean = pseudo_sum / n;
        let realized_mean = realized_sum / n;
        let se = |sum: f64, sq: f64, mean: f64| {
            if runs > 1 {
                let var = (sq - sum * mean).max(0.0) / (n - 1.0);
                (var / n).sqrt()
            } else {
                0.0
            }
        };
        table.rows.push(MetricsRow {
            agent: label.to_string(),
            agent_index,
            instance_index,
            t,
            pseudo_regret_mean: pseudo_mean,
            pseudo_regret_se: se(pseudo_sum, pseudo_sq, pseudo_mean),
            realized_regret_mean: realized_mean,
            realized_regret_se: se(realized_sum, realized_sq, realized_mean),
            p_optimal_mean: (p_opt_count == runs).then(|| p_opt_sum / n),
            p_suboptimal_play: suboptimal_count as f64 / n,
            suboptimal_count,
            runs: runs as u32,
        });
    }
}
