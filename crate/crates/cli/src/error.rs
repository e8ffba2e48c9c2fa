use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("Jacobi identity fails at {0} triple(s)")]
    Validation(usize),
    #[error("{0} check(s) failed")]
    Mismatch(usize),
}

impl CliError {
    /// 0 pass, 1 I/O or parse, 2 validation failure, 3 check mismatch.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } | CliError::Parse(_) | CliError::Usage(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<schurlie::Error> for CliError {
    fn from(e: schurlie::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}
