//! Overlapping community networks: graph and cover loading, projection of a
//! cover onto its community network, structural metrics, distribution fits
//! and brute-force oracles for testing.

pub mod cover;
pub mod distfit;
pub mod error;
pub mod graph;
pub mod histogram;
pub mod io;
pub mod metrics;
pub mod oracle;
pub mod project;
pub mod report;
pub mod rng;
pub mod svg;

pub use cover::{CommunityCover, CommunityId, CoverSummary};
pub use distfit::{fit_all, Distribution, FitFamily, FitResult, RankedFits, Sample};
pub use error::{Error, Result};
pub use graph::{Graph, LoadSummary, NodeId};
pub use histogram::IntegerHistogram;
pub use metrics::{HopDistribution, HopMode};
pub use project::{project, ComponentCensus, ProjectedGraph};
pub use report::{AnalysisOptions, AnalysisReport, NetworkReport};
pub use rng::PinnedRng;
