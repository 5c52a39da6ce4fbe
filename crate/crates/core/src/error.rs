use thiserror::Error;

use crate::pairs::AxiomReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("spacing must be a positive integer, got {0}")]
    InvalidSpacing(i64),

    #[error("grid ratio must be at least 2, got {0}")]
    InvalidRatio(i64),

    #[error("point {point} does not lie on the grid of spacing {spacing}")]
    OffGrid { point: String, spacing: i64 },

    #[error("spacing mismatch: expected {expected}, found {found}")]
    SpacingMismatch { expected: i64, found: i64 },

    #[error("{0}")]
    Usage(String),

    #[error("invalid boundary pair:\n{0}")]
    InvalidPair(Box<AxiomReport>),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
