use thiserror::Error;

use crate::graph::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not unitriangular: {0}")]
    NotUnitriangular(String),

    #[error("matrix is not diagonal: {0}")]
    NotDiagonal(String),

    #[error("invalid hamburger graph: {0}")]
    InvalidGraph(ValidationReport),

    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("size bound exceeded: {what} is {actual}, limit {limit}")]
    SizeBound {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("invalid region: {0}")]
    InvalidRegion(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True when the failure comes from a configured budget rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::SizeBound { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
