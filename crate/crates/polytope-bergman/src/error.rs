use thiserror::Error;

use matroid_core::MatroidError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("point has {got} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("zero denominator in coordinate {0}")]
    ZeroDenominator(usize),
    #[error("coordinate {0} does not fit in a 64-bit fraction")]
    TooLarge(usize),
    #[error("chains of flats need a loop-free matroid")]
    LoopsPresent,
    #[error("malformed point batch: {0}")]
    Json(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub type Result<T> = std::result::Result<T, PolytopeError>;
