use std::path::PathBuf;

use cactus_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 2 for violated preconditions, 3 for unreadable or unparsable input, 1 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Usage(_) => 2,
            CliError::Core(e) => match e {
                Error::Parse { .. } | Error::DegreeBudget { .. } => 3,
                Error::Internal(_) => 1,
                _ => 2,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self.exit_code() {
            3 => "parse",
            2 => "precondition",
            _ => "internal",
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
