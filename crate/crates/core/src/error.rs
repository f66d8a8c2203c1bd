//! Error type shared by all spreadnet modules.

use thiserror::Error;

/// Errors produced by graph construction, ingestion, generation and analysis.
#[derive(Debug, Error)]
pub enum Error {
    /// An arc references a node id outside `0..n`.
    #[error("arc ({from}, {to}) is out of range for a graph with {n} nodes{}",
            .line.map(|l| format!(" (line {l})")).unwrap_or_default())]
    ArcOutOfRange {
        from: u64,
        to: u64,
        n: usize,
        line: Option<usize>,
    },

    /// A node id passed to an operation is outside `0..n`.
    #[error("node id {id} is out of range for a graph with {n} nodes")]
    NodeOutOfRange { id: usize, n: usize },

    /// A data line could not be parsed as an arc.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// The input contained no arcs.
    #[error("no arcs")]
    NoArcs,

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),

    /// The hurdle coefficient must be a finite positive number.
    #[error("invalid hurdle coefficient {text:?}: must be finite and > 0")]
    InvalidHurdle { text: String },

    /// Index normalization divides by n-1, so a single-node graph is rejected.
    #[error("degenerate graph: {n} node(s), need at least 2")]
    DegenerateGraph { n: usize },

    /// Invalid small-world generator parameters.
    #[error("invalid generator parameters: {msg}")]
    InvalidParams { msg: String },

    /// Orientation only applies to undirected-expanded graphs.
    #[error("orientation requires an undirected-expanded graph")]
    NotUndirected,

    /// An iterative metric failed to reach its tolerance.
    #[error("{metric} did not converge after {iterations} iterations (last residual {residual:e})")]
    NoConvergence {
        metric: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// A shortlist query failed validation.
    #[error("invalid shortlist query: {msg}")]
    InvalidQuery { msg: String },

    /// A sort key string did not match any known key.
    #[error("unknown sort key {0:?}")]
    UnknownSortKey(String),

    /// A classifier string did not match any known method.
    #[error("unknown classifier {0:?}")]
    UnknownClassifier(String),

    /// Report serialization failure.
    #[error("report serialization failed: {0}")]
    Serialize(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
