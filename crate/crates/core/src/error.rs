use thiserror::Error;

/// Everything that can go wrong while building objects or running computations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex index {index} out of range for a complex on {vertex_count} vertices")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("invalid polytope ({invariant}): {detail}")]
    InvalidPolytope {
        invariant: &'static str,
        detail: String,
    },

    #[error("{0} is not a maximal face of the complex")]
    NotMaximalFace(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "moment-angle computation over 2^{vertices} vertex subsets exceeds the configured limit \
         of 2^{limit}; raise it with --max-subsets {vertices}"
    )]
    SubsetLimit { vertices: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("json: {0}")]
    Json(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
