use std::path::PathBuf;

use leash::FrechetError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}:{line}: {message}", path.display())]
    Parse { path: PathBuf, line: usize, message: String },
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Frechet(#[from] FrechetError),
}

impl CliError {
    /// Process exit code: 2 for unreadable input or bad configuration, 3 for
    /// curves of different dimensions, 1 for anything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Config(_) => 2,
            CliError::Frechet(e) if e.is_dimension_mismatch() => 3,
            CliError::Frechet(FrechetError::InvalidInput(_) | FrechetError::Config(_) | FrechetError::NonFinite { .. }) => 2,
            CliError::Frechet(_) => 1,
        }
    }
}
