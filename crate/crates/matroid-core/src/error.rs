use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("the ground set must be nonempty")]
    EmptyGroundSet,
    #[error("ground set of size {0} exceeds the supported maximum of 16")]
    GroundSetTooLarge(usize),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("invalid rank {r} for a ground set of size {n}")]
    InvalidRank { r: usize, n: usize },
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
    #[error("invalid chain: {0}")]
    InvalidChain(String),
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("matroid has loops")]
    LoopsPresent,
    #[error("invalid matroid spec: {0}")]
    Spec(String),
}
