use thiserror::Error;

use crate::corpus::Location;

/// Fatal problems while ingesting a corpus.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("corpus contains no valid publications")]
    EmptyCorpus,
    #[error("duplicate publication id `{id}` ({first} and {second})")]
    DuplicateId {
        id: String,
        first: Location,
        second: Location,
    },
    #[error("unknown publication `{0}`")]
    UnknownPublication(String),
    #[error("bibtex syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
}

/// Lookup and argument errors raised by graph and metric queries.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QueryError {
    #[error("unknown author `{0}`")]
    UnknownAuthor(String),
    #[error("source and target are the same author `{0}`")]
    SameAuthor(String),
    #[error("path length bound must be at least 1 edge")]
    ZeroPathBound,
}
