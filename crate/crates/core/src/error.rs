use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {vertex} (edge {index})")]
    SelfLoop { index: usize, vertex: usize },

    #[error("edge {index} ({u}, {v}) has an endpoint outside [0, {n})")]
    EndpointOutOfRange {
        index: usize,
        u: usize,
        v: usize,
        n: usize,
    },

    #[error("graph must have at least one vertex")]
    Empty,

    #[error("graph must be connected")]
    Disconnected,

    #[error("resolving computations need at least 2 vertices, got {0}")]
    Trivial(usize),

    #[error("graph has {n} vertices; at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid pair ({0}, {0}): endpoints must differ")]
    DegeneratePair(usize),

    #[error("invalid family spec: {0}")]
    FamilySpec(String),

    #[error("{0}")]
    Hypothesis(String),

    #[error("exact metric dimension search is capped at {cap} vertices but the graph has {n}; use the greedy upper bound instead")]
    ExactCapExceeded { n: usize, cap: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    Format(String),
}
