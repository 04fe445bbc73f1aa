use thiserror::Error;

use crate::graph::Issue;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {}", format_issues(.0))]
    InvalidGraph(Vec<Issue>),

    #[error("not a simple connected cubic graph: {0}")]
    NotCubic(String),

    #[error("face tracing did not close after {steps} steps (malformed rotation system)")]
    FaceTracing { steps: usize },

    #[error("unknown vertex {0}")]
    UnknownVertex(usize),

    #[error("unknown edge ({0}, {1})")]
    UnknownEdge(usize, usize),

    #[error("unknown face {0}")]
    UnknownFace(usize),

    #[error("column index {index} out of range for {cols} columns")]
    ColumnOutOfRange { index: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("color {0} is not in {{0, 1, 2}}")]
    InvalidColor(u8),

    #[error("not a Heawood vector: {0}")]
    NotHeawood(String),

    #[error("improper Tait coloring at vertex {vertex}")]
    ImproperColoring { vertex: usize },

    #[error("color step at vertex {vertex} is not constant")]
    NonConstantStep { vertex: usize },

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("no perfect matching found")]
    NoPerfectMatching,

    #[error("face {face} has length {len}, expected a triangle")]
    NotTriangular { face: usize, len: usize },

    #[error("contraction does not yield a simple cubic graph: {0}")]
    ContractionNotSimple(String),

    #[error("parameter n = {n} below minimum {min}")]
    ParameterTooSmall { n: usize, min: usize },

    #[error("{what} limit {limit} exceeded")]
    LimitExceeded { what: &'static str, limit: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

fn format_issues(issues: &[Issue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
