use thiserror::Error;

/// Errors produced by the group, Hopf and ledger engines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{what} exceeds the configured cap ({size} > {cap})")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPerm(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("not an exact factorization: {0}")]
    NotExactFactorization(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
