//! The overlapping community network: one node per community, an edge
//! wherever two communities share at least `threshold` members.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::cover::{pairwise_overlaps, CommunityCover};
use crate::error::{Error, Result};
use crate::graph::{connected_components, Graph, NodeId};
use crate::histogram::IntegerHistogram;

#[derive(Debug, Clone)]
pub struct ProjectedGraph {
    graph: Graph,
    /// Overlap size per adjacency slot, aligned with the graph's
    /// neighbor arrays (each edge stored twice).
    weights: Vec<u32>,
    threshold: u32,
    max_membership: usize,
}

impl ProjectedGraph {
    /// The unweighted community network.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn threshold(&self) -> u32 {
        self.threshold
    }

    /// Largest number of communities any single node belongs to; a node with
    /// membership k contributed C(k, 2) pair increments.
    pub fn max_membership(&self) -> usize {
        self.max_membership
    }

    pub fn weight(&self, a: usize, b: usize) -> Option<u32> {
        self.graph.adjacency_index(a, b).map(|i| self.weights[i])
    }

    /// Sum of overlap sizes over edges.
    pub fn total_weight(&self) -> u64 {
        self.weights.iter().map(|&w| w as u64).sum::<u64>() / 2
    }

    /// Edge list `a b [weight]`, community ids as written in the cover order.
    pub fn write_edge_list<W: Write>(&self, mut out: W, with_weights: bool) -> io::Result<()> {
        for (a, b) in self.graph.edges() {
            if with_weights {
                writeln!(out, "{a}\t{b}\t{}", self.weight(a, b).unwrap())?;
            } else {
                writeln!(out, "{a}\t{b}")?;
            }
        }
        Ok(())
    }
}

pub fn project(cover: &CommunityCover, threshold: u32) -> Result<ProjectedGraph> {
    if threshold < 1 {
        return Err(Error::InvalidArgument("threshold must be at least 1".into()));
    }
    let overlaps = pairwise_overlaps(cover);
    let kept: Vec<_> = overlaps
        .pairs
        .into_iter()
        .filter(|&(_, _, w)| w >= threshold)
        .collect();
    let (graph, _) = Graph::build(
        cover.community_count(),
        kept.iter().map(|&(a, b, _)| (a as NodeId, b as NodeId)).collect(),
        None,
    );
    let mut weights = vec![0u32; graph.adjacency_len()];
    for &(a, b, w) in &kept {
        let (a, b) = (a as usize, b as usize);
        weights[graph.adjacency_index(a, b).unwrap()] = w;
        weights[graph.adjacency_index(b, a).unwrap()] = w;
    }
    Ok(ProjectedGraph {
        graph,
        weights,
        threshold,
        max_membership: overlaps.max_membership,
    })
}

/// Share of nodes in the giant component, in smaller non-trivial
/// components and isolated, plus the giant component's share of links.
/// A graph without edges has no giant component: every node is isolated.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComponentCensus {
    pub giant_node_fraction: f64,
    pub small_component_node_fraction: f64,
    pub isolated_node_fraction: f64,
    pub giant_link_fraction: f64,
    pub components: usize,
    pub giant_nodes: usize,
    pub giant_links: usize,
}

pub fn component_census(pg: &ProjectedGraph) -> ComponentCensus {
    graph_census(pg.graph())
}

pub fn graph_census(g: &Graph) -> ComponentCensus {
    let labels = connected_components(g);
    let n = g.node_count();
    let giant_size = labels.giant_size();
    let has_giant = giant_size >= 2;
    let isolated = labels.component_sizes.iter().filter(|&&s| s == 1).count();
    let giant_nodes = if has_giant { giant_size } else { 0 };
    let small = n - isolated - giant_nodes;
    let giant_links = if has_giant {
        let gid = labels.giant_id as u32;
        g.edges()
            .filter(|&(u, _)| labels.component_of[u] == gid)
            .count()
    } else {
        0
    };
    let frac = |x: usize| if n == 0 { 0.0 } else { x as f64 / n as f64 };
    ComponentCensus {
        giant_node_fraction: frac(giant_nodes),
        small_component_node_fraction: frac(small),
        isolated_node_fraction: frac(isolated),
        giant_link_fraction: if g.edge_count() == 0 {
            0.0
        } else {
            giant_links as f64 / g.edge_count() as f64
        },
        components: labels.component_count(),
        giant_nodes,
        giant_links,
    }
}

/// Community degrees, zero-degree communities included.
pub fn community_degree_histogram(pg: &ProjectedGraph) -> IntegerHistogram {
    pg.graph().degrees().map(|d| d as u64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cover_from(n: usize, cs: &[&[u32]]) -> CommunityCover {
        CommunityCover::from_communities(n, cs.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn toy() -> CommunityCover {
        // A={1,2,3} B={2,3,4} C={5}
        cover_from(5, &[&[0, 1, 2], &[1, 2, 3], &[4]])
    }

    #[test]
    fn toy_projection() {
        let pg = project(&toy(), 1).unwrap();
        assert_eq!(pg.graph().edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(pg.weight(0, 1), Some(2));
        assert_eq!(pg.weight(1, 0), Some(2));
        assert_eq!(pg.weight(0, 2), None);
        assert_eq!(pg.graph().degrees().collect::<Vec<_>>(), vec![1, 1, 0]);
        let h = community_degree_histogram(&pg);
        assert_eq!(h.bins().iter().map(|(&a, &b)| (a, b)).collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn threshold_cuts_edges() {
        assert_eq!(project(&toy(), 3).unwrap().graph().edge_count(), 0);
        assert_eq!(project(&toy(), 2).unwrap().graph().edge_count(), 1);
        assert!(project(&toy(), 0).is_err());
    }

    #[test]
    fn star_cover_degrees() {
        // hub community {0..4}; leaves {0,5}, {1,6}, {2,7}, {3,8}
        let cover = cover_from(9, &[&[0, 1, 2, 3], &[0, 5], &[1, 6], &[2, 7], &[3, 8]]);
        let h = community_degree_histogram(&project(&cover, 1).unwrap());
        assert_eq!(h.get(1), 4);
        assert_eq!(h.get(4), 1);
    }

    #[test]
    fn census_classes() {
        let disjoint = project(&cover_from(3, &[&[0], &[1], &[2]]), 1).unwrap();
        let c = component_census(&disjoint);
        assert_eq!(c.isolated_node_fraction, 1.0);
        assert_eq!(c.giant_node_fraction, 0.0);

        let chain = cover_from(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let c = component_census(&project(&chain, 1).unwrap());
        assert_eq!(
            (c.giant_node_fraction, c.small_component_node_fraction, c.isolated_node_fraction),
            (1.0, 0.0, 0.0)
        );
        assert_eq!(c.giant_link_fraction, 1.0);
    }

    #[test]
    fn census_mixed() {
        // giant: 0-1-2, small: 3-4, isolated: 5
        let cover = cover_from(
            10,
            &[&[0, 1], &[1, 2], &[2, 3], &[5, 6], &[6, 7], &[9]],
        );
        let c = component_census(&project(&cover, 1).unwrap());
        assert!((c.giant_node_fraction - 0.5).abs() < 1e-12);
        assert!((c.small_component_node_fraction - 2.0 / 6.0).abs() < 1e-12);
        assert!((c.isolated_node_fraction - 1.0 / 6.0).abs() < 1e-12);
        assert!((c.giant_link_fraction - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn weights_sum_to_incidences() {
        let cover = cover_from(6, &[&[0, 1, 2, 3], &[1, 2, 3], &[3, 4, 5], &[0, 5]]);
        let pg = project(&cover, 1).unwrap();
        assert_eq!(pg.total_weight(), cover.pair_incidences());
        let mut buf = Vec::new();
        pg.write_edge_list(&mut buf, true).unwrap();
        assert!(String::from_utf8(buf).unwrap().starts_with("0\t1\t3\n"));
    }
}
