use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("graph must have at least one vertex")]
    EmptyVertexSet,
    #[error("invalid adjacency order for vertex {vertex}: {reason}")]
    BadAdjacencyOrder { vertex: usize, reason: String },
    #[error("labeling is not a bijection onto 1..={0}")]
    NotBijective(usize),
    #[error("labeling has {labeling} entries but the graph has {graph} vertices")]
    SizeMismatch { labeling: usize, graph: usize },
    #[error("{{{0},{1}}} is not an edge, so the sequence is not a path")]
    NotAPath(usize, usize),
    #[error("endpoints must satisfy i < j (got {0}, {1})")]
    BadPair(usize, usize),
    #[error("n = {n} exceeds the guard max_n = {max}")]
    TooLarge { n: usize, max: usize },
    #[error("n = {n} is too small (need at least {min})")]
    TooSmall { n: usize, min: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph is not a tree")]
    NotATree,
    #[error("tree is a path (2-closed), not a 3-closed candidate")]
    IsAPath,
    #[error("graph is not a caterpillar tree")]
    NotCaterpillar,
    #[error("bad start vertex: {0}")]
    BadStart(String),
    #[error("bad bridge endpoints: {0}")]
    BadEndpoints(String),
    #[error("bad join: {0}")]
    BadJoin(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("Buchberger step guard of {0} exceeded")]
    GuardExceeded(usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// Guard violations (size caps, step budgets) as opposed to domain errors.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::TooLarge { .. } | Error::GuardExceeded(_))
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
