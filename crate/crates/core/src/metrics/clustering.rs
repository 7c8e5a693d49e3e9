//! Triangle-based clustering measures.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distfit::Sample;
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleCounts {
    pub per_node: Vec<u64>,
    pub total: u64,
}

/// Counts triangles once each by orienting every edge from the lower to the
/// higher `(degree, id)` rank and intersecting forward neighbor lists.
pub fn triangle_counts(g: &Graph) -> TriangleCounts {
    let n = g.node_count();
    let ahead = |u: usize, v: usize| (g.degree(u), u) < (g.degree(v), v);
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut forward: Vec<NodeId> = Vec::with_capacity(g.edge_count());
    for u in 0..n {
        forward.extend(g.neighbors(u).iter().filter(|&&v| ahead(u, v as usize)));
        offsets.push(forward.len());
    }
    let fwd = |u: usize| &forward[offsets[u]..offsets[u + 1]];

    let per_node = (0..n)
        .into_par_iter()
        .fold(
            || vec![0u64; n],
            |mut acc, u| {
                let fu = fwd(u);
                for &v in fu {
                    let fv = fwd(v as usize);
                    let (mut i, mut j) = (0, 0);
                    while i < fu.len() && j < fv.len() {
                        match fu[i].cmp(&fv[j]) {
                            std::cmp::Ordering::Less => i += 1,
                            std::cmp::Ordering::Greater => j += 1,
                            std::cmp::Ordering::Equal => {
                                acc[u] += 1;
                                acc[v as usize] += 1;
                                acc[fu[i] as usize] += 1;
                                i += 1;
                                j += 1;
                            }
                        }
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let total = per_node.iter().sum::<u64>() / 3;
    TriangleCounts { per_node, total }
}

fn wedges_at(degree: usize) -> u64 {
    let d = degree as u64;
    d * d.saturating_sub(1) / 2
}

/// Local clustering of `v`, or `None` when its degree is below 2.
pub fn local_clustering(g: &Graph, v: usize) -> Result<Option<f64>> {
    if v >= g.node_count() {
        return Err(Error::InvalidNode(v));
    }
    let nb = g.neighbors(v);
    if nb.len() < 2 {
        return Ok(None);
    }
    let links: usize = nb
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            nb[i + 1..]
                .iter()
                .filter(|&&b| g.has_edge(a as usize, b as usize))
                .count()
        })
        .sum();
    Ok(Some(links as f64 / wedges_at(nb.len()) as f64))
}

/// Every clustering measure derived from one triangle count.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringProfile {
    /// Local coefficient per node, `None` for degree < 2.
    pub local: Vec<Option<f64>>,
    pub triangles: u64,
    pub wedges: u64,
}

impl ClusteringProfile {
    pub fn compute(g: &Graph) -> Self {
        let tri = triangle_counts(g);
        let local = (0..g.node_count())
            .map(|v| {
                let w = wedges_at(g.degree(v));
                (w > 0).then(|| tri.per_node[v] as f64 / w as f64)
            })
            .collect();
        ClusteringProfile {
            local,
            triangles: tri.total,
            wedges: g.degrees().map(wedges_at).sum(),
        }
    }

    /// Mean local clustering over nodes of degree >= 2.
    pub fn average_local(&self) -> Option<f64> {
        let (sum, count) = self
            .local
            .iter()
            .flatten()
            .fold((0.0, 0usize), |(s, c), &x| (s + x, c + 1));
        (count > 0).then(|| sum / count as f64)
    }

    /// Mean local clustering over all nodes, degree < 2 counted as zero.
    pub fn average_local_zero(&self) -> Option<f64> {
        let sum = self.local.iter().flatten().fold(0.0, |s, &x| s + x);
        (!self.local.is_empty()).then(|| sum / self.local.len() as f64)
    }

    /// 3 · triangles / wedges.
    pub fn transitivity(&self) -> Option<f64> {
        (self.wedges > 0).then(|| 3.0 * self.triangles as f64 / self.wedges as f64)
    }

    pub fn by_degree(&self, g: &Graph) -> ClusteringByDegree {
        let mut acc: std::collections::BTreeMap<usize, (f64, usize)> = Default::default();
        for (v, c) in self.local.iter().enumerate() {
            if let Some(c) = c {
                let e = acc.entry(g.degree(v)).or_insert((0.0, 0));
                e.0 += c;
                e.1 += 1;
            }
        }
        ClusteringByDegree {
            entries: acc
                .into_iter()
                .map(|(degree, (sum, nodes))| DegreeClustering {
                    degree,
                    mean: sum / nodes as f64,
                    nodes,
                })
                .collect(),
        }
    }
}

pub fn average_local_clustering(g: &Graph) -> Result<f64> {
    ClusteringProfile::compute(g)
        .average_local()
        .ok_or(Error::Undefined("average local clustering"))
}

pub fn transitivity(g: &Graph) -> Result<f64> {
    ClusteringProfile::compute(g)
        .transitivity()
        .ok_or(Error::Undefined("transitivity"))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreeClustering {
    pub degree: usize,
    pub mean: f64,
    pub nodes: usize,
}

/// Mean local clustering for each degree k >= 2 present in the graph.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct ClusteringByDegree {
    pub entries: Vec<DegreeClustering>,
}

impl ClusteringByDegree {
    pub fn get(&self, degree: usize) -> Option<f64> {
        self.entries
            .binary_search_by_key(&degree, |e| e.degree)
            .ok()
            .map(|i| self.entries[i].mean)
    }

    /// The per-degree means as an unweighted sample.
    pub fn to_sample(&self) -> Option<Sample> {
        Sample::from_values(self.entries.iter().map(|e| e.mean)).ok()
    }
}

pub fn clustering_by_degree(g: &Graph) -> ClusteringByDegree {
    ClusteringProfile::compute(g).by_degree(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn barbell() -> Graph {
        graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])
    }

    #[test]
    fn zero_variant_without_wedges_is_positive_zero() {
        let p = ClusteringProfile::compute(&path(2));
        assert_eq!(p.average_local(), None);
        assert!(p.average_local_zero().unwrap().is_sign_positive());
    }

    #[test]
    fn local_values() {
        assert_eq!(local_clustering(&complete(3), 0).unwrap(), Some(1.0));
        assert_eq!(local_clustering(&path(3), 1).unwrap(), Some(0.0));
        assert_eq!(local_clustering(&path(3), 0).unwrap(), None);
        assert!(matches!(local_clustering(&path(3), 3), Err(Error::InvalidNode(3))));
    }

    #[test]
    fn complete_and_star() {
        assert_eq!(average_local_clustering(&complete(4)).unwrap(), 1.0);
        assert_eq!(transitivity(&complete(4)).unwrap(), 1.0);
        assert_eq!(transitivity(&star(4)).unwrap(), 0.0);
        assert!(matches!(transitivity(&path(2)), Err(Error::Undefined(_))));
    }

    #[test]
    fn by_degree_k4() {
        let c = clustering_by_degree(&complete(4));
        assert_eq!(c.entries.len(), 1);
        assert_eq!(c.get(3), Some(1.0));
    }

    #[test]
    fn by_degree_barbell() {
        // Bridge endpoints have degree 3 with one linked neighbor pair of three.
        let c = clustering_by_degree(&barbell());
        assert_eq!(c.get(2), Some(1.0));
        assert!((c.get(3).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(c.entries[0].nodes, 4);
    }

    #[test]
    fn triangle_totals() {
        assert_eq!(triangle_counts(&complete(5)).total, 10);
        assert_eq!(triangle_counts(&barbell()).total, 2);
        assert_eq!(triangle_counts(&cycle(5)).total, 0);
    }

    #[test]
    fn zero_variant_counts_low_degree_nodes() {
        // triangle with a pendant: node 3 has degree 1
        let g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]);
        let p = ClusteringProfile::compute(&g);
        let expected = (1.0 + 1.0 + 1.0 / 3.0) / 3.0;
        assert!((p.average_local().unwrap() - expected).abs() < 1e-15);
        assert!((p.average_local_zero().unwrap() - (1.0 + 1.0 + 1.0 / 3.0) / 4.0).abs() < 1e-15);
    }
}
