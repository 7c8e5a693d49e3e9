//! Immutable undirected simple graphs in compressed adjacency form.
//!
//! Node ids are dense `0..n`. When a graph is loaded from an edge list the
//! original identifiers are kept in `labels`, which is always strictly
//! increasing so label lookup is a binary search and induced subgraphs keep
//! the ordering.

mod components;
mod parse;

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use components::{connected_components, extract_giant, ComponentLabeling};
pub use parse::{parse_edge_list, read_edge_list};

pub type NodeId = u32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
    edge_count: usize,
    labels: Option<Vec<u64>>,
}

/// Counts reported while building a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LoadSummary {
    pub nodes: usize,
    pub edges: usize,
    pub dropped_duplicates: usize,
    pub dropped_self_loops: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Density {
    /// 2m / (n(n-1)).
    pub undirected: f64,
    /// m / (n(n-1)).
    pub directed_convention: f64,
}

impl Graph {
    /// Builds a graph on `node_count` nodes. Self-loops and repeated edges
    /// (in either orientation) are dropped and counted.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<(Graph, LoadSummary)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if node_count > NodeId::MAX as usize {
            return Err(Error::InvalidArgument(format!(
                "{node_count} nodes exceed the 32-bit id space"
            )));
        }
        let mut pairs = Vec::new();
        for (u, v) in edges {
            if u >= node_count {
                return Err(Error::InvalidNode(u));
            }
            if v >= node_count {
                return Err(Error::InvalidNode(v));
            }
            pairs.push((u as NodeId, v as NodeId));
        }
        Ok(Self::build(node_count, pairs, None))
    }

    pub(crate) fn build(
        node_count: usize,
        mut pairs: Vec<(NodeId, NodeId)>,
        labels: Option<Vec<u64>>,
    ) -> (Graph, LoadSummary) {
        let before = pairs.len();
        pairs.retain(|&(u, v)| u != v);
        let dropped_self_loops = before - pairs.len();
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        let dropped_duplicates = before - dropped_self_loops - pairs.len();

        let mut degree = vec![0usize; node_count];
        for &(u, v) in &pairs {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        offsets.push(0);
        let mut acc = 0;
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        // Walking the (u < v) pairs in lexicographic order appends every
        // neighbor list in ascending order: lower neighbors arrive first.
        let mut cursor = offsets[..node_count].to_vec();
        let mut targets = vec![0 as NodeId; acc];
        for &(u, v) in &pairs {
            targets[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            targets[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        let graph = Graph {
            offsets,
            targets,
            edge_count: pairs.len(),
            labels,
        };
        let summary = LoadSummary {
            nodes: node_count,
            edges: graph.edge_count,
            dropped_duplicates,
            dropped_self_loops,
        };
        (graph, summary)
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[NodeId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().max().unwrap_or(0)
    }

    pub fn mean_degree(&self) -> f64 {
        if self.node_count() == 0 {
            0.0
        } else {
            2.0 * self.edge_count as f64 / self.node_count() as f64
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&(v as NodeId)).is_ok()
    }

    /// Undirected edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.node_count()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Position of `(u, v)` in the flat adjacency array.
    pub(crate) fn adjacency_index(&self, u: usize, v: usize) -> Option<usize> {
        self.neighbors(u)
            .binary_search(&(v as NodeId))
            .ok()
            .map(|i| self.offsets[u] + i)
    }

    pub(crate) fn adjacency_len(&self) -> usize {
        self.targets.len()
    }

    pub fn labels(&self) -> Option<&[u64]> {
        self.labels.as_deref()
    }

    /// External identifier of `v`; the internal id when the graph is unlabeled.
    pub fn label(&self, v: usize) -> u64 {
        match &self.labels {
            Some(l) => l[v],
            None => v as u64,
        }
    }

    pub fn node_of_label(&self, label: u64) -> Option<usize> {
        match &self.labels {
            Some(l) => l.binary_search(&label).ok(),
            None => (label < self.node_count() as u64).then_some(label as usize),
        }
    }

    /// Subgraph induced by `nodes` (strictly increasing internal ids),
    /// relabeled densely in the same order. Labels are carried over.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![NodeId::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            new_id[v] = i as NodeId;
        }
        let mut offsets = Vec::with_capacity(nodes.len() + 1);
        offsets.push(0);
        let mut targets = Vec::new();
        for &v in nodes {
            targets.extend(
                self.neighbors(v)
                    .iter()
                    .map(|&w| new_id[w as usize])
                    .filter(|&w| w != NodeId::MAX),
            );
            offsets.push(targets.len());
        }
        let labels = Some(nodes.iter().map(|&v| self.label(v)).collect());
        Graph {
            edge_count: targets.len() / 2,
            offsets,
            targets,
            labels,
        }
    }

    /// Writes one `label label` line per undirected edge.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(out, "{}\t{}", self.label(u), self.label(v))?;
        }
        Ok(())
    }

    /// Verifies the structural invariants; returns a description of the first
    /// violation.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.node_count();
        for u in 0..n {
            let nb = self.neighbors(u);
            if nb.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("neighbors of {u} not strictly increasing"));
            }
            for &v in nb {
                let v = v as usize;
                if v >= n {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if !self.has_edge(v, u) {
                    return Err(format!("edge {u}-{v} not symmetric"));
                }
            }
        }
        if self.targets.len() != 2 * self.edge_count {
            return Err("adjacency length differs from 2m".into());
        }
        if let Some(l) = &self.labels {
            if l.len() != n || l.windows(2).any(|w| w[0] >= w[1]) {
                return Err("labels not strictly increasing".into());
            }
        }
        Ok(())
    }
}

pub fn density(g: &Graph) -> Result<Density> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::Undefined("density"));
    }
    let pairs = n as f64 * (n - 1) as f64;
    let m = g.edge_count() as f64;
    Ok(Density {
        undirected: 2.0 * m / pairs,
        directed_convention: m / pairs,
    })
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn builder_drops_loops_and_duplicates() {
        let (g, s) = Graph::from_edges(3, [(0, 1), (1, 0), (1, 2), (2, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(s.dropped_duplicates, 1);
        assert_eq!(s.dropped_self_loops, 1);
        assert_eq!(g.neighbors(1), &[0, 2]);
        g.check_invariants().unwrap();
    }

    #[test]
    fn out_of_range_endpoint() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(Error::InvalidNode(2))
        ));
    }

    #[test]
    fn density_conventions() {
        assert_eq!(density(&complete(3)).unwrap().undirected, 1.0);
        let p4 = density(&path(4)).unwrap();
        assert_eq!(p4.undirected, 0.5);
        assert_eq!(p4.directed_convention, 0.25);
        assert!(matches!(density(&graph(1, &[])), Err(Error::Undefined(_))));
    }

    #[test]
    fn dblp_density_arithmetic() {
        // m / (n(n-1)) with the published DBLP counts.
        let (n, m) = (317_080f64, 1_049_866f64);
        let directed = m / (n * (n - 1.0));
        assert!((directed - 1.04e-5).abs() < 0.005e-5);
    }

    #[test]
    fn induced_subgraph_keeps_labels() {
        let g = graph(5, &[(0, 1), (1, 2), (3, 4)]);
        let h = g.induced_subgraph(&[1, 2, 4]);
        assert_eq!(h.node_count(), 3);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.labels(), Some(&[1, 2, 4][..]));
        assert_eq!(h.node_of_label(4), Some(2));
        h.check_invariants().unwrap();
    }

    #[test]
    fn edges_are_ordered() {
        let g = cycle(4);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
    }
}
