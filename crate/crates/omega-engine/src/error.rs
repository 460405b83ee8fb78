use thiserror::Error;

use matroid_core::MatroidError;

use crate::ChainVariant;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OmegaError {
    #[error("{variant} does not apply: {reason}")]
    VariantInapplicable { variant: ChainVariant, reason: String },
    #[error("{variant} is capped at n = {cap}, got n = {n}")]
    Infeasible { variant: ChainVariant, n: usize, cap: usize },
    #[error("rank-4 formula evaluated to the non-integer {0}")]
    NonIntegralRank4(String),
    #[error("no Schubert data was supplied")]
    NoSchubertData,
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub type Result<T> = std::result::Result<T, OmegaError>;
