//! Parameter estimators for each family.

use std::f64::consts::PI;

use statrs::function::gamma::digamma;

use super::family::{Distribution, FitFamily, BETA_EPSILON};
use super::sample::Sample;
use super::special::trigamma;
use crate::error::{Error, Result};

pub const MIN_SAMPLES: usize = 5;
pub const ROOT_TOLERANCE: f64 = 1e-8;
pub const MAX_ITERATIONS: usize = 100;

fn domain(family: FitFamily, reason: impl Into<String>) -> Error {
    Error::Domain {
        family: family.name(),
        reason: reason.into(),
    }
}

/// Estimates the parameters of `family` from `sample`.
pub fn fit(family: FitFamily, sample: &Sample) -> Result<Distribution> {
    if sample.total() < MIN_SAMPLES as u64 {
        return Err(Error::InsufficientSamples {
            needed: MIN_SAMPLES,
            got: sample.total() as usize,
        });
    }
    if family.requires_positive() && sample.min().unwrap() <= 0.0 {
        return Err(domain(family, "samples must be strictly positive"));
    }
    if family == FitFamily::Exponential && sample.min().unwrap() < 0.0 {
        return Err(domain(family, "samples must be non-negative"));
    }
    let dist = match family {
        FitFamily::Normal => Distribution::Normal {
            mu: sample.mean(),
            sigma: sample.std_dev(),
        },
        FitFamily::LogNormal => {
            let mu = sample.mean_of(f64::ln);
            Distribution::LogNormal {
                mu,
                sigma: sample.mean_of(|x| (x.ln() - mu).powi(2)).sqrt(),
            }
        }
        FitFamily::Exponential => {
            let mean = sample.mean();
            if mean <= 0.0 {
                return Err(domain(family, "sample mean must be positive"));
            }
            Distribution::Exponential { rate: 1.0 / mean }
        }
        FitFamily::Uniform => Distribution::Uniform {
            lower: sample.min().unwrap(),
            upper: sample.max().unwrap(),
        },
        FitFamily::PowerLaw => power_law_mle(sample, sample.min().unwrap())?,
        FitFamily::Weibull => weibull_mle(sample)?,
        FitFamily::Gamma => gamma_mle(sample)?,
        FitFamily::Logistic => Distribution::Logistic {
            location: sample.mean(),
            scale: sample.std_dev() * 3f64.sqrt() / PI,
        },
        FitFamily::Cauchy => Distribution::Cauchy {
            location: sample.quantile(0.5),
            scale: 0.5 * (sample.quantile(0.75) - sample.quantile(0.25)),
        },
        FitFamily::Beta => beta_moments(sample)?,
    };
    if !dist.is_valid() {
        return Err(domain(family, format!("degenerate parameters {:?}", dist.params())));
    }
    Ok(dist)
}

/// Continuous power-law MLE on the observations `>= xmin`:
/// alpha = 1 + n / Σ ln(x / xmin).
pub fn power_law_mle(sample: &Sample, xmin: f64) -> Result<Distribution> {
    if !(xmin > 0.0) {
        return Err(domain(FitFamily::PowerLaw, "xmin must be positive"));
    }
    let tail = sample.tail(xmin);
    let log_sum: f64 = tail.iter().map(|(x, c)| c as f64 * (x / xmin).ln()).sum();
    if tail.is_empty() || log_sum <= 0.0 {
        return Err(domain(FitFamily::PowerLaw, "tail has no spread above xmin"));
    }
    Ok(Distribution::PowerLaw {
        alpha: 1.0 + tail.total() as f64 / log_sum,
        xmin,
    })
}

/// Weibull MLE. The shape k solves
/// 1/k + mean(ln y) − Σ y^k ln y / Σ y^k = 0 on y = x / max(x), a strictly
/// decreasing function of k; solved by Newton steps kept inside a sign
/// bracket.
fn weibull_mle(sample: &Sample) -> Result<Distribution> {
    let family = FitFamily::Weibull;
    let top = sample.max().unwrap();
    if sample.distinct() < 2 {
        return Err(domain(family, "all samples are equal"));
    }
    let ly: Vec<(f64, f64)> = sample.iter().map(|(x, c)| ((x / top).ln(), c as f64)).collect();
    let mean_ln = ly.iter().map(|&(l, c)| l * c).sum::<f64>() / sample.total() as f64;
    let eval = |k: f64| {
        let (mut b, mut a, mut cc) = (0.0, 0.0, 0.0);
        for &(l, w) in &ly {
            let yk = w * (k * l).exp();
            b += yk;
            a += yk * l;
            cc += yk * l * l;
        }
        let g = 1.0 / k + mean_ln - a / b;
        let dg = -1.0 / (k * k) - (cc * b - a * a) / (b * b);
        (g, dg)
    };

    let sd_ln = (ly.iter().map(|&(l, c)| (l - mean_ln).powi(2) * c).sum::<f64>()
        / sample.total() as f64)
        .sqrt();
    let mut k = (PI / (6f64.sqrt() * sd_ln)).clamp(1e-3, 1e3);
    let (mut lo, mut hi) = (k, k);
    while eval(lo).0 < 0.0 {
        lo /= 2.0;
        if lo < 1e-12 {
            return Err(domain(family, "no shape root bracket"));
        }
    }
    while eval(hi).0 > 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return Err(domain(family, "no shape root bracket"));
        }
    }
    let mut converged = false;
    for _ in 0..MAX_ITERATIONS {
        let (g, dg) = eval(k);
        if g > 0.0 {
            lo = k;
        } else {
            hi = k;
        }
        let mut next = k - g / dg;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - k).abs();
        k = next;
        if step < ROOT_TOLERANCE * k.max(1.0) {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NoConvergence {
            what: "weibull shape",
            iterations: MAX_ITERATIONS,
            last: k,
        });
    }
    let mean_yk = ly.iter().map(|&(l, w)| w * (k * l).exp()).sum::<f64>() / sample.total() as f64;
    Ok(Distribution::Weibull {
        shape: k,
        scale: top * mean_yk.powf(1.0 / k),
    })
}

/// Gamma MLE: Newton on ln k − ψ(k) = ln(mean) − mean(ln x), started from
/// the moment estimate mean² / variance.
fn gamma_mle(sample: &Sample) -> Result<Distribution> {
    let family = FitFamily::Gamma;
    let mean = sample.mean();
    let s = mean.ln() - sample.mean_of(f64::ln);
    if !(s > 0.0) || sample.distinct() < 2 {
        return Err(domain(family, "samples have no spread"));
    }
    let mut k = mean * mean / sample.variance();
    for _ in 0..MAX_ITERATIONS {
        let f = k.ln() - digamma(k) - s;
        let df = 1.0 / k - trigamma(k);
        let mut next = k - f / df;
        if !(next > 0.0) {
            next = k / 2.0;
        }
        let step = (next - k).abs();
        k = next;
        if step < ROOT_TOLERANCE * k.max(1.0) {
            return Ok(Distribution::Gamma {
                shape: k,
                scale: mean / k,
            });
        }
    }
    Err(Error::NoConvergence {
        what: "gamma shape",
        iterations: MAX_ITERATIONS,
        last: k,
    })
}

/// Beta by moment matching after mapping [min, max] affinely onto
/// [ε, 1 − ε].
fn beta_moments(sample: &Sample) -> Result<Distribution> {
    let family = FitFamily::Beta;
    let (lower, upper) = (sample.min().unwrap(), sample.max().unwrap());
    if !(upper > lower) {
        return Err(domain(family, "all samples are equal"));
    }
    let scaled = sample.map(|x| BETA_EPSILON + (1.0 - 2.0 * BETA_EPSILON) * (x - lower) / (upper - lower))?;
    let m = scaled.mean();
    let v = scaled.variance();
    if !(v > 0.0 && v < m * (1.0 - m)) {
        return Err(domain(family, "variance outside the beta moment range"));
    }
    let common = m * (1.0 - m) / v - 1.0;
    Ok(Distribution::Beta {
        alpha: m * common,
        beta: (1.0 - m) * common,
        lower,
        upper,
    })
}
