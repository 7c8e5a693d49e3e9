use std::io;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("input contains no edges")]
    EmptyInput,

    #[error("line {line}: node id {id} does not exist in the graph")]
    UnknownNode { id: u64, line: usize },

    #[error("node {0} is out of range")]
    InvalidNode(usize),

    #[error("graph has no nodes")]
    EmptyGraph,

    #[error("{0} is undefined for this graph")]
    Undefined(&'static str),

    #[error("graph has {nodes} nodes, oracle limit is {limit}")]
    GuardExceeded { nodes: usize, limit: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },

    #[error("{family}: {reason}")]
    Domain { family: &'static str, reason: String },

    #[error("{what} did not converge after {iterations} iterations (last iterate {last})")]
    NoConvergence {
        what: &'static str,
        iterations: usize,
        last: f64,
    },

    #[error(transparent)]
    Io(#[from] io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad input rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. }
                | Error::EmptyInput
                | Error::UnknownNode { .. }
                | Error::InsufficientSamples { .. }
                | Error::InvalidArgument(_)
                | Error::Io(_)
                | Error::Csv(_)
        )
    }
}
