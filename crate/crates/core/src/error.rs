use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: String, v: String },

    #[error("line {line}: self loop on {label}")]
    SelfLoop { line: usize, label: String },

    #[error("line {line}: bad weight {weight}")]
    BadWeight { line: usize, weight: String },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("vertex id {0} out of range")]
    VertexOutOfRange(usize),

    #[error("embedding is not on the simplex: {0}")]
    BadEmbedding(String),

    #[error("invalid weight transform: {0}")]
    BadTransform(String),

    #[error("invalid solver configuration: {0}")]
    BadConfig(String),

    #[error("coordinate pair carries no mass")]
    NoMass,

    #[error("gap is undefined for a non-positive density")]
    UndefinedGap,

    #[error("not a KKT point: residual {residual} exceeds tolerance {tolerance}")]
    NotAKktPoint { residual: f64, tolerance: f64 },

    #[error("negative weight {w} on edge ({u}, {v}) inside the shrink set")]
    NegativeWeight { u: usize, v: usize, w: f64 },

    #[error("affinity of the starting point is zero")]
    ZeroAffinity,

    #[error("graph has {n} vertices, exact search is limited to {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("vertex set is not a positive clique")]
    NotAClique,

    #[error("corpus has no documents")]
    EmptyCorpus,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
