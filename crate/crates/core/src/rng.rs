//! Seeded random source with a pinned bit stream.
//!
//! Every derived quantity is computed from raw `u64` draws with the formulas
//! below, so fixtures can be regenerated bit-for-bit from another language
//! given a ChaCha8 implementation.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rustc_hash::FxHashMap;

/// Recorded in report provenance.
pub const RNG_ALGORITHM: &str = "chacha8; key = seed (u64 little-endian) in bytes 0..8, \
     remaining key bytes zero, stream 0; f64 = (next_u64 >> 11) * 2^-53; \
     below(n) = (next_u64 * n) >> 64";

#[derive(Debug, Clone)]
pub struct PinnedRng(ChaCha8Rng);

impl PinnedRng {
    pub fn new(seed: u64) -> Self {
        let mut key = [0u8; 32];
        key[..8].copy_from_slice(&seed.to_le_bytes());
        PinnedRng(ChaCha8Rng::from_seed(key))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform on [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform on (0, 1].
    pub fn next_f64_open(&mut self) -> f64 {
        1.0 - self.next_f64()
    }

    /// Integer in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: u64) -> u64 {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as u64
    }

    /// `k` distinct indices from `0..n` by a partial Fisher-Yates shuffle.
    pub fn sample_distinct(&mut self, n: usize, k: usize) -> Vec<usize> {
        assert!(k <= n, "cannot draw {k} distinct values from {n}");
        if k.saturating_mul(16) < n {
            // Same swaps on a virtual pool, touching only O(k) slots.
            let mut moved: FxHashMap<usize, usize> = FxHashMap::default();
            let mut out = Vec::with_capacity(k);
            for i in 0..k {
                let j = i + self.below((n - i) as u64) as usize;
                let at_j = moved.get(&j).copied().unwrap_or(j);
                let at_i = moved.get(&i).copied().unwrap_or(i);
                moved.insert(j, at_i);
                out.push(at_j);
            }
            return out;
        }
        let mut pool: Vec<usize> = (0..n).collect();
        for i in 0..k {
            let j = i + self.below((n - i) as u64) as usize;
            pool.swap(i, j);
        }
        pool.truncate(k);
        pool
    }

    /// Standard normal deviate (Box-Muller, cosine branch only).
    pub fn standard_normal(&mut self) -> f64 {
        let u1 = self.next_f64_open();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Continuous power law with density ~ x^-alpha on [xmin, inf).
    pub fn power_law(&mut self, alpha: f64, xmin: f64) -> f64 {
        xmin * self.next_f64_open().powf(-1.0 / (alpha - 1.0))
    }
}
