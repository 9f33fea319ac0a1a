//! Instance generation and snapshot grids.

use bandit_core::{BanditInstance, RngStream};

use crate::error::RunError;

/// Draws `n_instances` bandit instances with `n_arms` means i.i.d. uniform
/// on `[low, high]`. The set is fully determined by `seed`.
pub fn generate_instances(
    n_arms: usize,
    low: f64,
    high: f64,
    n_instances: usize,
    seed: u64,
) -> Result<Vec<BanditInstance>, RunError> {
    if !(0.0 <= low && low < high && high <= 1.0) {
        return Err(RunError::BadRange { low, high });
    }
    let mut rng = RngStream::from_seed(seed);
    let mut instances = Vec::with_capacity(n_instances);
    for _ in 0..n_instances {
        let means: Vec<f64> = (0..n_arms)
            .map(|_| low + rng.uniform() * (high - low))
            .collect();
        instances.push(BanditInstance::new(means)?);
    }
    Ok(instances)
}

/// `n_points` logarithmically spaced times in `[1, horizon]`, deduplicated
/// after rounding, always ending at the horizon.
pub fn snapshot_grid(horizon: u64, n_points: usize) -> Vec<u64> {
    assert!(horizon >= 1 && n_points >= 1);
    if n_points == 1 || horizon == 1 {
        return vec![horizon];
    }
    let mut times = Vec::with_capacity(n_points);
    let log_t = (horizon as f64).ln();
    for i in 0..n_points {
        let frac = i as f64 / (n_points - 1) as f64;
        let t = (log_t * frac).exp().round() as u64;
        times.push(t.clamp(1, horizon));
    }
    *times.last_mut().unwrap() = horizon;
    times.dedup();
    times
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_hits_exact_decades() {
        assert_eq!(snapshot_grid(1000, 4), vec![1, 10, 100, 1000]);
        assert_eq!(
            snapshot_grid(100_000, 6),
            vec![1, 10, 100, 1000, 10_000, 100_000]
        );
    }

    #[test]
    fn grid_degenerate_cases() {
        assert_eq!(snapshot_grid(1, 5), vec![1]);
        assert_eq!(snapshot_grid(1000, 1), vec![1000]);
        assert_eq!(snapshot_grid(2, 10), vec![1, 2]);
    }

    #[test]
    fn grid_is_sorted_dedup_ends_at_horizon() {
        for &(t, n) in &[(10u64, 30usize), (777, 13), (100_000, 41)] {
            let grid = snapshot_grid(t, n);
            assert!(grid.windows(2).all(|w| w[0] < w[1]), "{grid:?}");
            assert_eq!(*grid.last().unwrap(), t);
            assert!(*grid.first().unwrap() >= 1);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let a = generate_instances(10, 0.0, 0.1, 5, 99).unwrap();
        let b = generate_instances(10, 0.0, 0.1, 5, 99).unwrap();
        assert_eq!(a, b);
        let c = generate_instances(10, 0.0, 0.1, 5, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generation_rejects_bad_ranges() {
        assert!(generate_instances(5, 0.3, 0.3, 1, 0).is_err());
        assert!(generate_instances(5, 0.5, 0.4, 1, 0).is_err());
        assert!(generate_instances(5, -0.1, 0.5, 1, 0).is_err());
        assert!(generate_instances(5, 0.5, 1.2, 1, 0).is_err());
    }

    #[test]
    fn generated_means_match_uniform_moments() {
        // grand mean of 1000 uniforms on [0, 0.1]: 3-sigma band around 0.05
        let instances = generate_instances(10, 0.0, 0.1, 100, 12345).unwrap();
        let all: Vec<f64> = instances.iter().flat_map(|i| i.means().to_vec()).collect();
        assert_eq!(all.len(), 1000);
        let grand_mean = all.iter().sum::<f64>() / all.len() as f64;
        let tol = 3.0 * (0.1 / 12f64.sqrt()) / (all.len() as f64).sqrt();
        assert!(
            (grand_mean - 0.05).abs() < tol,
            "grand mean {grand_mean} outside {tol} of 0.05"
        );
        for m in all {
            assert!((0.0..=0.1).contains(&m));
        }
    }
}
