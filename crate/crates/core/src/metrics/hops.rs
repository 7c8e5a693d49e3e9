//! Shortest-path length distribution (hop plot).

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bfs::Bfs;
use crate::distfit::Sample;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::PinnedRng;

/// Default number of BFS sources in sampled mode.
pub const DEFAULT_SAMPLE_SOURCES: usize = 3000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HopMode {
    Exact,
    Sampled { sources: usize, seed: u64 },
}

/// Distances between connected node pairs.
///
/// `ordered_counts[d]` is the raw number of (source, target) pairs at
/// distance `d` over the BFS sources used. `pair_counts[d]` estimates the
/// number of unordered pairs: exact in exact mode, scaled by n / (2s) when
/// only s sources were explored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HopDistribution {
    pub mode: HopMode,
    pub sources: usize,
    pub ordered_counts: Vec<u64>,
    pub pair_counts: Vec<f64>,
    pub cumulative: Vec<f64>,
    pub mean_distance: Option<f64>,
    pub std_distance: Option<f64>,
    pub max_distance_observed: u32,
}

impl HopDistribution {
    fn from_counts(mode: HopMode, n: usize, sources: usize, ordered_counts: Vec<u64>) -> Self {
        let scale = n as f64 / (2.0 * sources as f64);
        let pair_counts: Vec<f64> = ordered_counts.iter().map(|&c| c as f64 * scale).collect();
        let total: u64 = ordered_counts.iter().sum();
        let mut cumulative = Vec::with_capacity(ordered_counts.len());
        let mut running = 0u64;
        for &c in &ordered_counts {
            running += c;
            cumulative.push(if total == 0 { 0.0 } else { running as f64 / total as f64 });
        }
        let (mean, std) = if total == 0 {
            (None, None)
        } else {
            let t = total as f64;
            let mean = ordered_counts
                .iter()
                .enumerate()
                .map(|(d, &c)| d as f64 * c as f64)
                .sum::<f64>()
                / t;
            let var = ordered_counts
                .iter()
                .enumerate()
                .map(|(d, &c)| (d as f64 - mean).powi(2) * c as f64)
                .sum::<f64>()
                / t;
            (Some(mean), Some(var.sqrt()))
        };
        HopDistribution {
            mode,
            sources,
            max_distance_observed: ordered_counts.len().saturating_sub(1) as u32,
            ordered_counts,
            pair_counts,
            cumulative,
            mean_distance: mean,
            std_distance: std,
        }
    }

    /// Fraction of connected pairs at distance at most `d`.
    pub fn g(&self, d: usize) -> f64 {
        match self.cumulative.get(d) {
            Some(&x) => x,
            None if self.cumulative.is_empty() => 0.0,
            None => 1.0,
        }
    }

    /// Probability mass at distance `d` among connected pairs.
    pub fn pmf(&self, d: usize) -> f64 {
        let total: u64 = self.ordered_counts.iter().sum();
        match self.ordered_counts.get(d) {
            Some(&c) if total > 0 => c as f64 / total as f64,
            _ => 0.0,
        }
    }

    /// Pairwise distances as a weighted sample (weights are the raw counts,
    /// which are proportional to the pair counts).
    pub fn to_sample(&self) -> Sample {
        Sample::from_weighted(
            self.ordered_counts
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c > 0)
                .map(|(d, &c)| (d as f64, c)),
        )
        .expect("distances are finite")
    }
}

pub fn hop_distribution(g: &Graph, mode: HopMode) -> Result<HopDistribution> {
    let n = g.node_count();
    let sources: Vec<usize> = match mode {
        HopMode::Exact => (0..n).collect(),
        HopMode::Sampled { sources, seed } => {
            if sources == 0 {
                return Err(Error::InvalidArgument("at least one source is required".into()));
            }
            if sources > n {
                return Err(Error::InvalidArgument(format!(
                    "{sources} sources requested from a graph with {n} nodes"
                )));
            }
            PinnedRng::new(seed).sample_distinct(n, sources)
        }
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let counts = sources
        .par_iter()
        .fold(
            || (Bfs::new(n), Vec::new()),
            |(mut bfs, mut acc), &s| {
                bfs.run(g, s);
                bfs.accumulate_levels(&mut acc);
                (bfs, acc)
            },
        )
        .map(|(_, acc)| acc)
        .reduce(Vec::new, |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        });
    Ok(HopDistribution::from_counts(mode, n, sources.len(), counts))
}
