use serde::{Deserialize, Serialize};

use super::ks::ks_sorted;
use super::sample::Sample;
use crate::error::{Error, Result};

pub const MIN_DISTINCT_FOR_SCAN: usize = 10;
/// Smallest tail (observations) a candidate xmin may leave.
pub const MIN_TAIL: u64 = 10;
/// Larger candidate sets are thinned to this many quantile-spaced values.
pub const MAX_CANDIDATES: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct XminScan {
    pub xmin: f64,
    pub alpha: f64,
    pub ks: f64,
    pub tail_size: u64,
    pub candidates: usize,
}

/// Chooses xmin by minimizing the KS distance between the tail above each
/// candidate and its maximum-likelihood power law.
pub fn powerlaw_xmin_scan(sample: &Sample) -> Result<XminScan> {
    let positive = sample.tail(f64::MIN_POSITIVE);
    let values = positive.values();
    let counts = positive.counts();
    if values.len() < MIN_DISTINCT_FOR_SCAN {
        return Err(Error::InsufficientSamples {
            needed: MIN_DISTINCT_FOR_SCAN,
            got: values.len(),
        });
    }
    // Suffix totals of counts and of count-weighted logs.
    let len = values.len();
    let mut tail_n = vec![0u64; len + 1];
    let mut tail_log = vec![0f64; len + 1];
    for j in (0..len).rev() {
        tail_n[j] = tail_n[j + 1] + counts[j];
        tail_log[j] = tail_log[j + 1] + counts[j] as f64 * values[j].ln();
    }
    // Candidates need MIN_TAIL observations and two distinct values above.
    let eligible: Vec<usize> = (0..len.saturating_sub(1))
        .filter(|&j| tail_n[j] >= MIN_TAIL)
        .collect();
    if eligible.is_empty() {
        return Err(Error::InsufficientSamples {
            needed: MIN_TAIL as usize,
            got: tail_n[0] as usize,
        });
    }
    let picked: Vec<usize> = if eligible.len() > MAX_CANDIDATES {
        let step = (eligible.len() - 1) as f64 / (MAX_CANDIDATES - 1) as f64;
        let mut p: Vec<usize> = (0..MAX_CANDIDATES)
            .map(|i| eligible[(i as f64 * step).round() as usize])
            .collect();
        p.dedup();
        p
    } else {
        eligible
    };

    let mut best: Option<XminScan> = None;
    for &j in &picked {
        let xmin = values[j];
        let n = tail_n[j];
        let log_sum = tail_log[j] - n as f64 * xmin.ln();
        if log_sum <= 0.0 {
            continue;
        }
        let alpha = 1.0 + n as f64 / log_sum;
        let ks = ks_sorted(&values[j..], &counts[j..], n, |x| {
            1.0 - (x / xmin).powf(1.0 - alpha)
        })
        .unwrap_or(1.0);
        if best.map_or(true, |b| ks < b.ks) {
            best = Some(XminScan {
                xmin,
                alpha,
                ks,
                tail_size: n,
                candidates: picked.len(),
            });
        }
    }
    best.ok_or(Error::Domain {
        family: "power-law",
        reason: "no candidate xmin produced a valid fit".into(),
    })
}
