//! Aggregated per-snapshot metrics and the CSV output format.

use std::io::Write;

use crate::config::MetricsFlags;
use crate::error::RunError;

/// The CSV header, fixed as an output contract.
pub const CSV_HEADER: &str = "agent,instance,t,pseudo_regret_mean,pseudo_regret_se,realized_regret_mean,p_optimal_mean,p_suboptimal_play,runs";

/// One aggregated row: an (agent, instance, snapshot time) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsRow {
    pub agent: String,
    pub agent_index: usize,
    pub instance_index: usize,
    pub t: u64,
    pub pseudo_regret_mean: f64,
    pub pseudo_regret_se: f64,
    pub realized_regret_mean: f64,
    /// Standard error of the realized regret; kept for analysis, not a CSV
    /// column.
    pub realized_regret_se: f64,
    /// Mean probability assigned to the optimal arm, for policies that track
    /// explicit probabilities.
    pub p_optimal_mean: Option<f64>,
    /// Fraction of replications that played a suboptimal arm at `t`.
    pub p_suboptimal_play: f64,
    /// Number of replications that played a suboptimal arm at `t` (exact
    /// count behind `p_suboptimal_play`).
    pub suboptimal_count: u64,
    pub runs: u32,
}

/// All rows of one experiment, ordered by (agent, instance, t).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct MetricsTable {
    pub rows: Vec<MetricsRow>,
}

/// Renders a float with 9 significant digits.
pub fn fmt_sig9(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    format!("{v:.8e}")
}

impl MetricsTable {
    pub fn to_csv(&self, flags: &MetricsFlags) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let pseudo_mean = flags
                .pseudo_regret
                .then(|| fmt_sig9(row.pseudo_regret_mean))
                .unwrap_or_default();
            let pseudo_se = flags
                .pseudo_regret
                .then(|| fmt_sig9(row.pseudo_regret_se))
                .unwrap_or_default();
            let realized = flags
                .realized_regret
                .then(|| fmt_sig9(row.realized_regret_mean))
                .unwrap_or_default();
            let p_opt = if flags.p_optimal {
                row.p_optimal_mean.map(fmt_sig9).unwrap_or_default()
            } else {
                String::new()
            };
            let p_sub = flags
                .p_suboptimal_play
                .then(|| fmt_sig9(row.p_suboptimal_play))
                .unwrap_or_default();
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                row.agent,
                row.instance_index,
                row.t,
                pseudo_mean,
                pseudo_se,
                realized,
                p_opt,
                p_sub,
                row.runs
            ));
        }
        out
    }

    pub fn write_csv(&self, w: &mut impl Write, flags: &MetricsFlags) -> Result<(), RunError> {
        w.write_all(self.to_csv(flags).as_bytes())?;
        Ok(())
    }

    /// Rows for one agent label.
    pub fn rows_for_agent<'a>(&'a self, agent: &'a str) -> impl Iterator<Item = &'a MetricsRow> {
        self.rows.iter().filter(move |r| r.agent == agent)
    }

    /// The row for (agent, instance, t), if present.
    pub fn row(&self, agent: &str, instance_index: usize, t: u64) -> Option<&MetricsRow> {
        self.rows
            .iter()
            .find(|r| r.agent == agent && r.instance_index == instance_index && r.t == t)
    }
}
