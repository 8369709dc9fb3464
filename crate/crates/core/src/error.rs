use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong when building or transforming algebras.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("repeated lower index in {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("conflicting values for entry {lower:?} -> {upper}")]
    DuplicateEntry { lower: Vec<usize>, upper: usize },
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("target vector is not in the span of the basis")]
    NotInSpan,
    #[error("operation requires an algebra with a verified Filippov identity")]
    UnverifiedAlgebra,
    #[error("index set {0:?} does not span a subalgebra")]
    NotASubalgebra(Vec<usize>),
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("grading violates the contraction condition at pair ({i}, {j}) -> {k}")]
    GradingViolation { i: usize, j: usize, k: usize },
    #[error("a commutator left the span of the extracted basis; input structure constants are inconsistent")]
    InternalSpanError,
    #[error("invalid rational literal {0:?}")]
    InvalidNumber(String),
    #[error("invalid splitting: {0}")]
    InvalidSplitting(String),
    #[error("{0}")]
    InvalidInput(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
}
