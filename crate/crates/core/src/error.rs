use thiserror::Error;

/// Errors raised by graph construction, ideal arithmetic and the oracles.
#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("loop edge at `{0}`")]
    LoopEdge(String),
    #[error("invalid clique partition: {0}")]
    NotAPartition(String),
    #[error("partition block {0:?} is not a clique")]
    NotAClique(Vec<String>),
    #[error("generated label `{0}` collides with an existing vertex")]
    LabelCollision(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("monomials or ideals live over different variable lists")]
    RingMismatch,
    #[error("{what} cap exceeded: {actual} > {limit}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,
    #[error("sequence is not a permutation of the minimal generators: {0}")]
    NotPermutation(String),
    #[error("vertex set {0:?} is not a minimal vertex cover")]
    NotMinimalCover(Vec<String>),
    #[error("base graph is not chordal")]
    NotChordal,
    #[error("graph does not have the shape required by mode `{mode}`: {reason}")]
    ModeShape { mode: &'static str, reason: String },
    #[error("`{0}` is a whisker apex, expected a base vertex")]
    ApexVertex(String),
    #[error("undefined for the zero ideal")]
    ZeroIdeal,
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
