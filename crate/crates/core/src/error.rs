use thiserror::Error;

/// Errors produced by graph construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),

    #[error("complete multipartite graph needs at least one part, each of size >= 1")]
    EmptyPart,

    #[error("{what}: n = {n} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("invalid Cameron-Walker specification: {0}")]
    InvalidCameronWalker(String),

    #[error("suspension set must be nonempty")]
    EmptySuspensionSet,

    #[error("set is not a maximal independent set")]
    NotMaximalIndependent,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("alpha = {alpha} does not match polynomial degree {degree}")]
    DegreeMismatch { alpha: usize, degree: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),
}

pub type Result<T> = std::result::Result<T, Error>;
