use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{0}")]
    Config(String),

    #[error("{path}: {source}")]
    Input {
        path: PathBuf,
        #[source]
        source: pcycles_core::Error,
    },

    #[error("unknown interval {0}")]
    UnknownInterval(String),

    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 2,
            CliError::Config(_) | CliError::Input { .. } => 3,
            CliError::UnknownInterval(_) => 4,
            CliError::Internal(_) => 1,
        }
    }
}
