//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// graph6 record rejected; `offset` is the byte position within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    /// Edge-list text rejected; `line` is 1-based.
    #[error("edge list parse error at line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    /// A stream record failed to parse; wraps the underlying parse error.
    #[error("line {line}: {source}")]
    StreamLine {
        line: u64,
        #[source]
        source: Box<Error>,
    },

    /// Operation requires a connected graph.
    #[error("graph is disconnected")]
    Disconnected,

    /// An edge argument does not exist in the graph.
    #[error("no edge {0}-{1} in the graph")]
    NotAnEdge(usize, usize),

    /// Family constructor or closed form received invalid parameters.
    #[error("invalid family spec: {0}")]
    FamilySpec(String),

    /// Enumeration order outside the supported range.
    #[error("built-in enumeration supports 1 <= n <= {max}, got {n}")]
    EnumerationOrder { n: usize, max: usize },

    /// A check failed to evaluate on a streamed graph.
    #[error("check {check} on {graph6}: {source}")]
    CheckEvaluation {
        check: String,
        graph6: String,
        #[source]
        source: Box<Error>,
    },

    /// Unknown check name, filter token, or similar registry miss.
    #[error("{0}")]
    InvalidInput(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
