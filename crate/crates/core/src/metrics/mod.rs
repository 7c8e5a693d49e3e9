//! Macroscopic topology measures.

mod assortativity;
pub(crate) mod bfs;
mod clustering;
mod diameter;
mod hops;

use serde::{Deserialize, Serialize};

pub use assortativity::assortativity;
pub use clustering::{
    average_local_clustering, clustering_by_degree, local_clustering, transitivity, triangle_counts,
    ClusteringByDegree, ClusteringProfile, DegreeClustering, TriangleCounts,
};
pub use diameter::{diameter, DiameterResult};
pub use hops::{hop_distribution, HopDistribution, HopMode, DEFAULT_SAMPLE_SOURCES};

use crate::error::{Error, Result};
use crate::graph::{density, Density, Graph};
use crate::histogram::IntegerHistogram;

/// Hop distances from `source` to every node, `None` when unreachable.
pub fn distances_from(g: &Graph, source: usize) -> Result<Vec<Option<u32>>> {
    if source >= g.node_count() {
        return Err(Error::InvalidNode(source));
    }
    let mut bfs = bfs::Bfs::new(g.node_count());
    bfs.run(g, source);
    Ok((0..g.node_count())
        .map(|v| Some(bfs.dist(v)).filter(|&d| d != bfs::UNREACHED))
        .collect())
}

pub fn degree_histogram(g: &Graph) -> IntegerHistogram {
    g.degrees().map(|d| d as u64).collect()
}

/// Scalar summary of one network. Undefined quantities are `None`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlobalSummary {
    pub nodes: usize,
    pub edges: usize,
    pub density: Option<Density>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub mean_degree: f64,
    pub average_shortest_path: Option<f64>,
    pub hop_mode: HopMode,
    pub diameter: u32,
    pub diameter_connected: bool,
    /// Mean over nodes of degree >= 2.
    pub average_local_clustering: Option<f64>,
    /// Mean over all nodes, degree < 2 counted as zero.
    pub average_local_clustering_zero: Option<f64>,
    pub transitivity: Option<f64>,
    pub triangles: u64,
    pub assortativity: Option<f64>,
}

pub fn global_summary(
    g: &Graph,
    hops: &HopDistribution,
    clustering: &ClusteringProfile,
) -> Result<GlobalSummary> {
    let d = diameter(g)?;
    Ok(GlobalSummary {
        nodes: g.node_count(),
        edges: g.edge_count(),
        density: density(g).ok(),
        min_degree: g.degrees().min().unwrap_or(0),
        max_degree: g.max_degree(),
        mean_degree: g.mean_degree(),
        average_shortest_path: hops.mean_distance,
        hop_mode: hops.mode,
        diameter: d.diameter,
        diameter_connected: d.connected,
        average_local_clustering: clustering.average_local(),
        average_local_clustering_zero: clustering.average_local_zero(),
        transitivity: clustering.transitivity(),
        triangles: clustering.triangles,
        assortativity: assortativity(g).ok(),
    })
}
