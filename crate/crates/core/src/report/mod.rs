//! End-to-end pipeline: load, project, measure, fit.

mod output;

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

pub use output::{
    write_cover_csvs, write_fit_tables, write_json, write_network_csvs, write_report_outputs,
    write_svgs, OutputFormats,
};

use crate::cover::{
    community_size_histogram, membership_histogram, overlap_size_histogram, read_cover,
    CommunityCover, CoverSummary, MembershipHistogram,
};
use crate::distfit::{fit_all, powerlaw_xmin_scan, RankedFits, XminScan};
use crate::error::Result;
use crate::graph::{connected_components, density, extract_giant, read_edge_list, Density, Graph, LoadSummary};
use crate::histogram::IntegerHistogram;
use crate::metrics::{
    degree_histogram, global_summary, hop_distribution, ClusteringByDegree, ClusteringProfile,
    GlobalSummary, HopDistribution, HopMode, DEFAULT_SAMPLE_SOURCES,
};
use crate::project::{community_degree_histogram, component_census, project, ComponentCensus, ProjectedGraph};
use crate::rng::RNG_ALGORITHM;

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisOptions {
    /// BFS sources for sampled hop distances.
    pub sample_sources: usize,
    pub seed: u64,
    /// Run BFS from every node instead of sampling.
    pub exact_hops: bool,
    /// Minimum overlap for a link between communities.
    pub threshold: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            sample_sources: DEFAULT_SAMPLE_SOURCES,
            seed: DEFAULT_SEED,
            exact_hops: false,
            threshold: 1,
        }
    }
}

impl AnalysisOptions {
    pub fn hop_mode(&self, nodes: usize) -> HopMode {
        if self.exact_hops {
            HopMode::Exact
        } else {
            HopMode::Sampled {
                sources: self.sample_sources.min(nodes),
                seed: self.seed,
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkFits {
    pub degree: RankedFits,
    /// KS-minimizing xmin for the degree power law, reported alongside the
    /// default-xmin fit.
    pub degree_xmin_scan: Option<XminScan>,
    pub clustering_by_degree: RankedFits,
    pub hop_distance: RankedFits,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NetworkReport {
    pub label: String,
    pub summary: GlobalSummary,
    pub degree_histogram: IntegerHistogram,
    pub clustering_by_degree: ClusteringByDegree,
    pub hops: HopDistribution,
    pub fits: NetworkFits,
}

/// Every per-network measure plus the fits of its distributions.
pub fn analyze_network(label: &str, g: &Graph, options: &AnalysisOptions) -> Result<NetworkReport> {
    let hops = hop_distribution(g, options.hop_mode(g.node_count()))?;
    let clustering = ClusteringProfile::compute(g);
    let summary = global_summary(g, &hops, &clustering)?;
    let degrees = degree_histogram(g);
    let by_degree = clustering.by_degree(g);

    let degree_sample = degrees.to_sample();
    let fits = NetworkFits {
        degree: fit_all(&degree_sample),
        degree_xmin_scan: powerlaw_xmin_scan(&degree_sample).ok(),
        clustering_by_degree: by_degree
            .to_sample()
            .map(|s| fit_all(&s))
            .unwrap_or_default(),
        hop_distance: fit_all(&hops.to_sample()),
    };
    Ok(NetworkReport {
        label: label.to_string(),
        summary,
        degree_histogram: degrees,
        clustering_by_degree: by_degree,
        hops,
        fits,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverFits {
    pub membership: RankedFits,
    pub overlap_size: RankedFits,
    pub community_size: RankedFits,
    pub community_degree: RankedFits,
}

/// Distributions of membership number, overlap size, community size and
/// community degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoverReport {
    pub membership: IntegerHistogram,
    pub uncovered_nodes: usize,
    pub overlap_size: IntegerHistogram,
    pub community_size: IntegerHistogram,
    pub community_degree: IntegerHistogram,
    pub fits: CoverFits,
}

fn fits_of(h: &IntegerHistogram) -> RankedFits {
    fit_all(&h.to_sample())
}

pub fn analyze_cover(cover: &CommunityCover, projected: &ProjectedGraph) -> CoverReport {
    let MembershipHistogram {
        histogram: membership,
        uncovered_nodes,
    } = membership_histogram(cover);
    let overlap_size = overlap_size_histogram(cover);
    let community_size = community_size_histogram(cover);
    let community_degree = community_degree_histogram(projected);
    let fits = CoverFits {
        membership: fits_of(&membership),
        overlap_size: fits_of(&overlap_size),
        community_size: fits_of(&community_size),
        community_degree: fits_of(&community_degree),
    };
    CoverReport {
        membership,
        uncovered_nodes,
        overlap_size,
        community_size,
        community_degree,
        fits,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphSize {
    pub nodes: usize,
    pub edges: usize,
}

impl From<&Graph> for GraphSize {
    fn from(g: &Graph) -> Self {
        GraphSize {
            nodes: g.node_count(),
            edges: g.edge_count(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProjectionReport {
    pub threshold: u32,
    pub max_membership: usize,
    pub pair_incidences: u64,
    pub full: GraphSize,
    pub census: ComponentCensus,
    pub giant: GraphSize,
    pub giant_density: Option<Density>,
}

/// Projected network, its census and its giant component.
pub struct Projection {
    pub graph: ProjectedGraph,
    pub report: ProjectionReport,
    pub giant: Graph,
}

pub fn run_projection(cover: &CommunityCover, threshold: u32) -> Result<Projection> {
    let pg = project(cover, threshold)?;
    let census = component_census(&pg);
    let (giant, _) = extract_giant(pg.graph(), &connected_components(pg.graph()));
    let report = ProjectionReport {
        threshold,
        max_membership: pg.max_membership(),
        pair_incidences: cover.pair_incidences(),
        full: GraphSize::from(pg.graph()),
        census,
        giant: GraphSize::from(&giant),
        giant_density: density(&giant).ok(),
    };
    Ok(Projection {
        graph: pg,
        report,
        giant,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseComponents {
    pub components: usize,
    pub giant: GraphSize,
    pub giant_density: Option<Density>,
}

/// Giant component of a loaded graph, labels preserved.
pub fn base_network(g: &Graph) -> (Graph, BaseComponents) {
    let labels = connected_components(g);
    let (giant, _) = extract_giant(g, &labels);
    let info = BaseComponents {
        components: labels.component_count(),
        giant: GraphSize::from(&giant),
        giant_density: density(&giant).ok(),
    };
    (giant, info)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool_version: String,
    pub inputs: Vec<String>,
    pub options: AnalysisOptions,
    pub rng: String,
    pub threads: usize,
    pub started_unix_seconds: u64,
    pub stage_seconds: BTreeMap<String, f64>,
}

impl Provenance {
    pub fn new(inputs: &[&Path], options: AnalysisOptions) -> Self {
        Provenance {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            inputs: inputs.iter().map(|p| p.display().to_string()).collect(),
            options,
            rng: RNG_ALGORITHM.to_string(),
            threads: rayon::current_num_threads(),
            started_unix_seconds: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
            stage_seconds: BTreeMap::new(),
        }
    }

    /// Runs `f`, recording its wall-clock time under `stage`.
    pub fn time<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.stage_seconds
            .insert(stage.to_string(), start.elapsed().as_secs_f64());
        out
    }
}

/// Full comparison of a network and its overlapping community network.
/// Everything outside `provenance` is a deterministic function of the
/// inputs and options.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub dataset: String,
    pub load: LoadSummary,
    pub base_components: BaseComponents,
    pub cover: CoverSummary,
    pub projection: ProjectionReport,
    pub base: NetworkReport,
    pub projected: NetworkReport,
    pub communities: CoverReport,
    pub provenance: Provenance,
}

pub fn run_report(
    graph_path: &Path,
    cover_path: &Path,
    dataset: &str,
    options: AnalysisOptions,
) -> Result<AnalysisReport> {
    let mut prov = Provenance::new(&[graph_path, cover_path], options);
    let (g, load) = prov.time("load_graph", || read_edge_list(graph_path))?;
    let (cover, cover_summary) = prov.time("load_cover", || read_cover(cover_path, &g))?;
    let projection = prov.time("project", || run_projection(&cover, options.threshold))?;
    let (base_graph, base_components) = prov.time("base_giant", || base_network(&g));
    drop(g);
    let base = prov.time("analyze_base", || {
        analyze_network(dataset, &base_graph, &options)
    })?;
    let projected_label = format!("{dataset}*");
    let projected = prov.time("analyze_projected", || {
        analyze_network(&projected_label, &projection.giant, &options)
    })?;
    let communities = prov.time("analyze_cover", || analyze_cover(&cover, &projection.graph));
    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION,
        dataset: dataset.to_string(),
        load,
        base_components,
        cover: cover_summary,
        projection: projection.report,
        base,
        projected,
        communities,
        provenance: prov,
    })
}
