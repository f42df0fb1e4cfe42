use std::path::PathBuf;

use thiserror::Error;

/// Failure of a command, carrying its process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    File { path: PathBuf, message: String },
    #[error("{0}")]
    Data(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::File { .. } | CliError::Data(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }

    pub fn file(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::File { path: path.into(), message: message.to_string() }
    }
}

impl From<scfilter::Error> for CliError {
    fn from(e: scfilter::Error) -> Self {
        use scfilter::Error as E;
        match e {
            E::EigenFailure | E::SingularSystem => CliError::Numerical(e.to_string()),
            E::InvalidParameter(_) | E::UnsupportedCombination => CliError::Usage(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Data(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
