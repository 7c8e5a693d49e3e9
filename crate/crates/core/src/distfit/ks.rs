use super::family::Distribution;
use super::sample::Sample;
use crate::error::{Error, Result};

/// Kolmogorov-Smirnov distance between the empirical CDF of `sample` and
/// `dist`. Tied observations are handled by comparing `F` at each distinct
/// value against the empirical CDF just before and just after it.
pub fn ks_statistic(sample: &Sample, dist: &Distribution) -> Result<f64> {
    if sample.is_empty() {
        return Err(Error::InsufficientSamples { needed: 1, got: 0 });
    }
    ks_sorted(sample.values(), sample.counts(), sample.total(), |x| dist.cdf(x)).ok_or_else(|| {
        Error::Domain {
            family: dist.family().name(),
            reason: "cdf undefined at a sample point".into(),
        }
    })
}

/// KS distance over ascending distinct `values` with multiplicities.
pub(crate) fn ks_sorted<F: Fn(f64) -> f64>(
    values: &[f64],
    counts: &[u64],
    total: u64,
    cdf: F,
) -> Option<f64> {
    let n = total as f64;
    let mut below = 0u64;
    let mut d: f64 = 0.0;
    for (&x, &c) in values.iter().zip(counts) {
        let f = cdf(x);
        if !f.is_finite() {
            return None;
        }
        let f = f.clamp(0.0, 1.0);
        let lo = below as f64 / n;
        below += c;
        let hi = below as f64 / n;
        d = d.max((hi - f).abs()).max((f - lo).abs());
    }
    Some(d.min(1.0))
}
