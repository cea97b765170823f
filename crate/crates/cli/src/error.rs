use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] projdim_core::Error),

    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("bad point cloud {path}: {reason}")]
    Cloud { path: PathBuf, reason: String },

    #[error("invalid argument: {0}")]
    Usage(String),
}

impl CliError {
    /// 2 for validation failures, 3 when an enumeration budget runs out.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(projdim_core::Error::BudgetExceeded { .. }) => 3,
            CliError::Write { .. } => 1,
            _ => 2,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
