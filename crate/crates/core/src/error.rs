use thiserror::Error;

/// Errors raised by the combinatorial constructors and algorithms.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid biword: {0}")]
    InvalidBiword(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("value {value} out of range 1..={bound}")]
    OutOfRange { value: u32, bound: u32 },

    #[error("{0}")]
    Unsupported(String),

    #[error("vertex budget exceeded: {needed} vertices requested, cap is {cap}")]
    CapExceeded { needed: usize, cap: usize },

    #[error("polynomial is not in the span of the product Schur basis: {0}")]
    NotInSpan(String),

    #[error("bitableau is not in the highest-weight set B'(2,m): {0}")]
    NotHighestWeight(String),

    #[error("no valid commuting completion exists for shape {0:?}")]
    NoCompletion(Vec<usize>),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
