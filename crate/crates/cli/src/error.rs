use std::path::PathBuf;

use scholarnet_core::{CorpusError, QueryError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {}: {source}", path.display())]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Query(#[from] QueryError),
}

impl CliError {
    /// 0 success, 1 usage or lookup error, 2 fatal corpus error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Corpus(_) => 2,
            _ => 1,
        }
    }
}
