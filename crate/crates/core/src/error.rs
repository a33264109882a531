use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("edge ({u}, {v}) has an endpoint outside 1..={n}")]
    OutOfRange { u: usize, v: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not present")]
    MissingEdge { u: usize, v: usize },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not unicyclic: {n} vertices, {m} edges")]
    NotUnicyclic { n: usize, m: usize },
    #[error("relabeling is not a permutation of the vertex set")]
    BadPermutation,
    #[error("{0} is not a cycle vertex")]
    NotOnCycle(usize),
    #[error("cycle of length {0} is even and has no single opposite edge")]
    EvenCycle(usize),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    PowerIterationStalled { iterations: usize, residual: f64 },
    #[error("graph is not connected")]
    Disconnected,
    #[error("vector is zero")]
    ZeroVector,
    #[error("vector has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TransformError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed graft site: {0}")]
    MalformedSite(String),
    #[error("graph is not in flattened form: {0}")]
    NotFlattened(String),
    #[error("ordering {ordering:?} is not a permutation of the loaded cycle vertices {expected:?}")]
    BadOrdering { ordering: Vec<usize>, expected: Vec<usize> },
    #[error("invalid path attachment: {0}")]
    BadAttachment(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoryError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("argument {0} is below 4; the recursion is only evaluated for y >= 4")]
    ArgumentTooSmall(f64),
    #[error("need at least one term")]
    NoTerms,
    #[error("girth {0} must be even and at least 4")]
    OddGirth(usize),
    #[error("girth {0} must be odd and at least 3")]
    EvenGirth(usize),
    #[error("need at least two loaded cycle vertices, found {0}")]
    TooFewLoaded(usize),
    #[error("factor must be 1 or 2, got {0}")]
    BadFactor(usize),
    #[error("constructed ordering {0:?} fails the prefix condition")]
    OrderingCheckFailed(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EnumerateError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("eigensolver failed on graph {canonical_form}: {source}")]
    Solver { canonical_form: String, source: SpectraError },
    #[error("worker pool: {0}")]
    Pool(String),
}

/// Line-numbered rejection from the edge-list reader.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}
