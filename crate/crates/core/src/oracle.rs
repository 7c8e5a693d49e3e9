//! Brute-force reference computations and seeded generators for tests.
//!
//! Everything here follows the textbook definition as directly as possible
//! and shares no code with the production paths it is compared against.

use std::collections::BTreeMap;

use crate::cover::CommunityCover;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::PinnedRng;

pub const ORACLE_NODE_LIMIT: usize = 1000;
pub const UNREACHABLE: u16 = u16::MAX;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleReport {
    pub nodes: usize,
    /// Row-major n × n shortest-path lengths, `UNREACHABLE` when disconnected.
    pub distances: Vec<u16>,
    pub triangles: u64,
    pub local_clustering: Vec<Option<f64>>,
    pub average_local_clustering: Option<f64>,
    pub clustering_by_degree: BTreeMap<usize, f64>,
    pub transitivity: Option<f64>,
    pub assortativity: Option<f64>,
    /// Largest finite distance, `None` without nodes.
    pub diameter: Option<u32>,
    /// Mean distance over connected unordered pairs.
    pub mean_path: Option<f64>,
    /// Unordered connected pairs at each distance (index = distance).
    pub pair_counts: Vec<u64>,
}

impl OracleReport {
    pub fn distance(&self, u: usize, v: usize) -> u16 {
        self.distances[u * self.nodes + v]
    }
}

pub fn naive_metrics(g: &Graph) -> Result<OracleReport> {
    let n = g.node_count();
    if n > ORACLE_NODE_LIMIT {
        return Err(Error::GuardExceeded {
            nodes: n,
            limit: ORACLE_NODE_LIMIT,
        });
    }
    let mut adj = vec![false; n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            adj[u * n + v as usize] = true;
        }
    }
    let a = |u: usize, v: usize| adj[u * n + v];

    // Floyd-Warshall
    const INF: u32 = u32::MAX / 4;
    let mut d = vec![INF; n * n];
    for u in 0..n {
        for v in 0..n {
            if u == v {
                d[u * n + v] = 0;
            } else if a(u, v) {
                d[u * n + v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            let dik = d[i * n + k];
            if dik == INF {
                continue;
            }
            for j in 0..n {
                let via = dik + d[k * n + j];
                if via < d[i * n + j] {
                    d[i * n + j] = via;
                }
            }
        }
    }
    let distances: Vec<u16> = d
        .iter()
        .map(|&x| if x == INF { UNREACHABLE } else { x as u16 })
        .collect();

    let mut pair_counts = Vec::new();
    let mut diameter = (n > 0).then_some(0u32);
    for u in 0..n {
        for v in u + 1..n {
            let x = distances[u * n + v];
            if x != UNREACHABLE {
                let x = x as usize;
                if pair_counts.len() <= x {
                    pair_counts.resize(x + 1, 0);
                }
                pair_counts[x] += 1;
                diameter = diameter.map(|m| m.max(x as u32));
            }
        }
    }
    let connected: u64 = pair_counts.iter().sum();
    let mean_path = (connected > 0).then(|| {
        pair_counts
            .iter()
            .enumerate()
            .map(|(k, &c)| k as f64 * c as f64)
            .sum::<f64>()
            / connected as f64
    });

    let mut triangles = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if !a(i, j) {
                continue;
            }
            for k in j + 1..n {
                if a(i, k) && a(j, k) {
                    triangles += 1;
                }
            }
        }
    }

    let degree: Vec<usize> = (0..n).map(|u| (0..n).filter(|&v| a(u, v)).count()).collect();
    let mut local_clustering = Vec::with_capacity(n);
    for v in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&w| a(v, w)).collect();
        if nb.len() < 2 {
            local_clustering.push(None);
            continue;
        }
        let mut linked = 0;
        let mut pairs = 0;
        for x in 0..nb.len() {
            for y in x + 1..nb.len() {
                pairs += 1;
                if a(nb[x], nb[y]) {
                    linked += 1;
                }
            }
        }
        local_clustering.push(Some(linked as f64 / pairs as f64));
    }
    let defined: Vec<f64> = local_clustering.iter().flatten().copied().collect();
    let average_local_clustering =
        (!defined.is_empty()).then(|| defined.iter().sum::<f64>() / defined.len() as f64);
    let mut by_degree: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for v in 0..n {
        if let Some(c) = local_clustering[v] {
            by_degree.entry(degree[v]).or_default().push(c);
        }
    }
    let clustering_by_degree = by_degree
        .into_iter()
        .map(|(k, cs)| (k, cs.iter().sum::<f64>() / cs.len() as f64))
        .collect();

    let wedges: u64 = degree
        .iter()
        .map(|&k| (k * k.saturating_sub(1) / 2) as u64)
        .sum();
    let transitivity = (wedges > 0).then(|| 3.0 * triangles as f64 / wedges as f64);

    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if a(u, v) {
                xs.push(degree[u] as f64);
                ys.push(degree[v] as f64);
            }
        }
    }
    let assortativity = pearson(&xs, &ys);

    Ok(OracleReport {
        nodes: n,
        distances,
        triangles,
        local_clustering,
        average_local_clustering,
        clustering_by_degree,
        transitivity,
        assortativity,
        diameter,
        mean_path,
        pair_counts,
    })
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    if xs.is_empty() {
        return None;
    }
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>();
    let vx = xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let vy = ys.iter().map(|y| (y - my).powi(2)).sum::<f64>();
    (vx > 0.0 && vy > 0.0).then(|| cov / (vx * vy).sqrt())
}

/// Erdős-Rényi G(n, p): each pair `i < j`, in lexicographic order, is kept
/// when the next uniform draw is below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidArgument(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = PinnedRng::new(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.next_f64() < p {
                edges.push((i, j));
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?.0)
}

/// Community size distribution for `random_cover`.
#[derive(Debug, Clone, PartialEq)]
pub enum SizeLaw {
    /// Sizes taken cyclically from the list.
    Fixed(Vec<usize>),
    /// Uniform integer in `min..=max`.
    Uniform { min: usize, max: usize },
    /// floor of a continuous power law on [min, ∞), capped at `max`.
    PowerLaw { alpha: f64, min: usize, max: usize },
}

/// A random cover of nodes `0..n`. Members of each community are drawn
/// without replacement.
pub fn random_cover(n: usize, communities: usize, law: &SizeLaw, seed: u64) -> Result<CommunityCover> {
    if communities == 0 {
        return Err(Error::InvalidArgument("at least one community is required".into()));
    }
    let mut rng = PinnedRng::new(seed);
    let mut list = Vec::with_capacity(communities);
    for i in 0..communities {
        let size = match law {
            SizeLaw::Fixed(sizes) => sizes[i % sizes.len()],
            SizeLaw::Uniform { min, max } => min + rng.below((max - min + 1) as u64) as usize,
            SizeLaw::PowerLaw { alpha, min, max } => {
                (rng.power_law(*alpha, *min as f64).floor() as usize).min(*max)
            }
        };
        if size > n {
            return Err(Error::InvalidArgument(format!(
                "community size {size} exceeds {n} nodes"
            )));
        }
        if size == 0 {
            return Err(Error::InvalidArgument("community size must be positive".into()));
        }
        list.push(
            rng.sample_distinct(n, size)
                .into_iter()
                .map(|v| v as NodeId)
                .collect(),
        );
    }
    CommunityCover::from_communities(n, list)
}

/// Every community pair with an intersection of at least `threshold`
/// members, found by intersecting member lists pair by pair.
pub fn brute_force_projection(cover: &CommunityCover, threshold: u32) -> Vec<(usize, usize, u32)> {
    let k = cover.community_count();
    let mut out = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let common = cover
                .members(a)
                .iter()
                .filter(|v| cover.members(b).contains(v))
                .count() as u32;
            if common >= threshold && common > 0 {
                out.push((a, b, common));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn k3_reference() {
        let r = naive_metrics(&complete(3)).unwrap();
        assert_eq!(r.triangles, 1);
        assert_eq!(r.transitivity, Some(1.0));
        assert_eq!(r.diameter, Some(1));
    }

    #[test]
    fn p4_reference() {
        let r = naive_metrics(&path(4)).unwrap();
        assert!((r.mean_path.unwrap() - 5.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.diameter, Some(3));
        assert!((r.assortativity.unwrap() + 0.5).abs() < 1e-15);
        assert_eq!(r.pair_counts, vec![0, 3, 2, 1]);
    }

    #[test]
    fn edgeless_reference() {
        let r = naive_metrics(&graph(4, &[])).unwrap();
        assert!((0..4).all(|u| (0..4).all(|v| u == v || r.distance(u, v) == UNREACHABLE)));
        assert_eq!(r.triangles, 0);
        assert_eq!(r.mean_path, None);
    }

    #[test]
    fn guard() {
        let big = graph(ORACLE_NODE_LIMIT + 1, &[]);
        assert!(matches!(naive_metrics(&big), Err(Error::GuardExceeded { .. })));
    }

    #[test]
    fn er_extremes_and_determinism() {
        assert_eq!(random_graph(5, 1.0, 3).unwrap().edge_count(), 10);
        assert_eq!(random_graph(5, 0.0, 3).unwrap().edge_count(), 0);
        let a = random_graph(100, 0.1, 42).unwrap();
        let b = random_graph(100, 0.1, 42).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        assert!(random_graph(3, 1.5, 0).is_err());
    }

    #[test]
    fn cover_generator() {
        let c = random_cover(4, 2, &SizeLaw::Fixed(vec![2, 2]), 5).unwrap();
        assert_eq!(c.community_count(), 2);
        assert!(c.check_inversion());
        let one = random_cover(3, 1, &SizeLaw::Fixed(vec![3]), 1).unwrap();
        assert_eq!(crate::cover::membership_histogram(&one).histogram.get(1), 3);
        assert!(random_cover(3, 1, &SizeLaw::Fixed(vec![4]), 1).is_err());
        assert!(random_cover(3, 0, &SizeLaw::Fixed(vec![1]), 1).is_err());
    }
}
