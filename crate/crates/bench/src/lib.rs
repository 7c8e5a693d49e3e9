//! Synthetic inputs for the benchmarks.

use ocn_core::cover::CommunityCover;
use ocn_core::graph::{Graph, NodeId};
use ocn_core::oracle::SizeLaw;
use ocn_core::PinnedRng;

/// Random graph on `n` nodes from `edges` uniform endpoint draws. Self loops
/// and repeated pairs collapse, so the result has slightly fewer edges.
pub fn sparse_graph(n: usize, edges: usize, seed: u64) -> Graph {
    let mut rng = PinnedRng::new(seed);
    let pairs: Vec<(usize, usize)> = (0..edges)
        .map(|_| (rng.below(n as u64) as usize, rng.below(n as u64) as usize))
        .collect();
    Graph::from_edges(n, pairs).expect("endpoints are in range").0
}

/// Cover whose communities are drawn from windows of consecutive node ids,
/// so neighbouring communities overlap.
pub fn windowed_cover(n: usize, communities: usize, law: &SizeLaw, window: usize, seed: u64) -> CommunityCover {
    let mut rng = PinnedRng::new(seed);
    let list = (0..communities)
        .map(|i| {
            let size = match law {
                SizeLaw::Fixed(sizes) => sizes[i % sizes.len()],
                SizeLaw::Uniform { min, max } => min + rng.below((max - min + 1) as u64) as usize,
                SizeLaw::PowerLaw { alpha, min, max } => {
                    (rng.power_law(*alpha, *min as f64).floor() as usize).min(*max)
                }
            }
            .clamp(1, n);
            let span = window.max(size).min(n);
            let start = rng.below(n as u64) as usize;
            rng.sample_distinct(span, size)
                .into_iter()
                .map(|k| ((start + k) % n) as NodeId)
                .collect()
        })
        .collect();
    CommunityCover::from_communities(n, list).expect("members are in range")
}
