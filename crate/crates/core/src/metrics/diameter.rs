//! Exact diameter by iFUB (iterative fringe upper bound).
//!
//! A 4-sweep picks a central start vertex `u` and a lower bound. The BFS
//! levels of `u` are then processed from the outermost inward: any vertex at
//! level `i` or deeper has eccentricity at most `2i`, so once the best
//! eccentricity found exceeds `2(i - 1)` the remaining levels cannot improve
//! it.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::bfs::Bfs;
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    /// Largest eccentricity over all components.
    pub diameter: u32,
    /// False when the graph has several components.
    pub connected: bool,
    /// Number of BFS traversals performed.
    pub bfs_runs: usize,
}

pub fn diameter(g: &Graph) -> Result<DiameterResult> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let labels = connected_components(g);
    // Highest-degree vertex of each component as the 4-sweep seed.
    let mut seed: Vec<Option<usize>> = vec![None; labels.component_count()];
    for v in 0..n {
        let c = labels.component_of[v] as usize;
        match seed[c] {
            Some(s) if g.degree(s) >= g.degree(v) => {}
            _ => seed[c] = Some(v),
        }
    }
    let mut bfs = Bfs::new(n);
    let mut best = 0;
    let mut runs = 0;
    for (c, s) in seed.into_iter().enumerate() {
        if labels.component_sizes[c] < 2 {
            continue;
        }
        let (d, r) = ifub(g, s.unwrap(), &mut bfs);
        best = best.max(d);
        runs += r;
    }
    Ok(DiameterResult {
        diameter: best,
        connected: labels.component_count() == 1,
        bfs_runs: runs,
    })
}

/// Diameter of the component containing `start`.
fn ifub(g: &Graph, start: usize, bfs: &mut Bfs) -> (u32, usize) {
    let mut runs = 0;
    let mut sweep = |bfs: &mut Bfs, v: usize| {
        runs += 1;
        bfs.run(g, v)
    };

    sweep(bfs, start);
    let a1 = bfs.farthest();
    let mut lower = sweep(bfs, a1);
    let r2 = bfs.walk_back(g, bfs.farthest(), lower / 2);
    lower = lower.max(sweep(bfs, r2));
    let a2 = bfs.farthest();
    let e = sweep(bfs, a2);
    lower = lower.max(e);
    let u = bfs.walk_back(g, bfs.farthest(), e / 2);

    let ecc_u = sweep(bfs, u);
    lower = lower.max(ecc_u);
    let mut levels: Vec<Vec<usize>> = vec![Vec::new(); ecc_u as usize + 1];
    for &v in bfs.order() {
        levels[bfs.dist(v as usize) as usize].push(v as usize);
    }

    let n = g.node_count();
    let mut i = ecc_u;
    let mut upper = 2 * ecc_u;
    while upper > lower && i > 0 {
        let fringe = &levels[i as usize];
        runs += fringe.len();
        let fringe_max = fringe
            .par_iter()
            .map_init(|| Bfs::new(n), |b, &x| b.run(g, x))
            .max()
            .unwrap_or(0);
        lower = lower.max(fringe_max);
        if lower > 2 * (i - 1) {
            return (lower, runs);
        }
        upper = 2 * (i - 1);
        i -= 1;
    }
    (lower, runs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn small_graphs() {
        assert_eq!(diameter(&cycle(5)).unwrap().diameter, 2);
        assert_eq!(diameter(&path(4)).unwrap().diameter, 3);
        assert_eq!(diameter(&complete(6)).unwrap().diameter, 1);
        assert_eq!(diameter(&star(5)).unwrap().diameter, 2);
        assert_eq!(diameter(&path(1)).unwrap().diameter, 0);
    }

    #[test]
    fn long_path_and_cycle() {
        assert_eq!(diameter(&path(101)).unwrap().diameter, 100);
        assert_eq!(diameter(&cycle(101)).unwrap().diameter, 50);
        assert_eq!(diameter(&cycle(100)).unwrap().diameter, 50);
    }

    #[test]
    fn disconnected_reports_max_component() {
        let g = graph(8, &[(0, 1), (1, 2), (3, 4), (4, 5), (5, 6)]);
        let r = diameter(&g).unwrap();
        assert_eq!(r.diameter, 3);
        assert!(!r.connected);
    }

    #[test]
    fn empty_graph_is_error() {
        assert!(matches!(diameter(&graph(0, &[])), Err(Error::EmptyGraph)));
    }
}
