//! Reproducible random number streams.
//!
//! Every stochastic component in the workspace draws from an [`RngStream`],
//! a ChaCha8 generator seeded from a single 64-bit value. ChaCha8 is a
//! fixed, portable algorithm, so a seed fully determines the draw sequence.
//! Independent per-replication streams are derived from a base seed with
//! [`derive_seed`], a splitmix64 avalanche mix over the run coordinates.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// splitmix64 finalizer: a full-avalanche 64-bit mix.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives an independent stream seed from `base` and a list of coordinates
/// (for the experiment runner: agent index, instance index, run index).
///
/// The rule is `s <- splitmix64(s ^ splitmix64(tag))` folded left over the
/// tags, starting from `splitmix64(base)`. Changing any coordinate or the
/// base seed avalanches the result.
pub fn derive_seed(base: u64, tags: &[u64]) -> u64 {
    let mut s = splitmix64(base);
    for &tag in tags {
        s = splitmix64(s ^ splitmix64(tag));
    }
    s
}

/// A seeded, single-owner random stream. Identical seeds produce identical
/// draw sequences.
#[derive(Debug, Clone)]
pub struct RngStream {
    seed: u64,
    inner: ChaCha8Rng,
}

impl RngStream {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this stream was created from.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw on `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        self.inner.random::<f64>()
    }

    /// Bernoulli draw: `true` with probability `p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.uniform() < p
    }

    /// Uniform index in `0..n`. Panics if `n == 0`.
    pub fn index(&mut self, n: usize) -> usize {
        assert!(n > 0, "cannot draw an index from an empty range");
        self.inner.random_range(0..n)
    }
}

impl RngCore for RngStream {
    fn next_u32(&mut self) -> u32 {
        self.inner.next_u32()
    }

    fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.inner.fill_bytes(dest)
    }
}
