use std::path::PathBuf;

use thiserror::Error;

use matroid_core::MatroidError;
use omega_engine::OmegaError;
use polytope_bergman::PolytopeError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{id}: {source}")]
    Matroid { id: String, source: MatroidError },
    #[error("{id}: {source}")]
    Omega { id: String, source: OmegaError },
    #[error("{id}: {source}")]
    Polytope { id: String, source: PolytopeError },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for unreadable input, 3 for sizes beyond a method's cap, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } | CliError::Usage(_) | CliError::Matroid { .. } | CliError::Io(_) => 2,
            CliError::Omega { source: OmegaError::Infeasible { .. }, .. } => 3,
            CliError::Omega { source: OmegaError::Matroid(_) | OmegaError::NoSchubertData, .. } => 2,
            CliError::Polytope { source: PolytopeError::LengthMismatch { .. }, .. } => 2,
            CliError::Omega { .. } | CliError::Polytope { .. } => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
