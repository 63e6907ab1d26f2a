use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{path}: line {line}, column {column}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },
    #[error(transparent)]
    Core(#[from] biharm_core::Error),
    #[error("{failed} of {total} checks failed")]
    ChecksFailed { failed: usize, total: usize },
}

impl CliError {
    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }

    /// 1: a check failed; 2: bad input; 3: numerical or policy refusal;
    /// 4: I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::ChecksFailed { .. } => 1,
            CliError::Parse { .. } | CliError::Invalid { .. } => 2,
            CliError::Core(biharm_core::Error::Validation { .. }) => 2,
            CliError::Core(_) => 3,
            CliError::Read { .. } | CliError::Write { .. } => 4,
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
