//! Error types shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError {
            message: message.into(),
        }
    }
}

/// A named parameter restriction that a computation ran into.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Violation {
    /// The restriction, e.g. `q^i != 1`.
    pub constraint: &'static str,
    pub index: Option<usize>,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.index {
            Some(i) => write!(f, "{} fails at i={}", self.constraint, i),
            None => write!(f, "{} fails", self.constraint),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, above the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid intersection array: {0}")]
    InvalidArray(String),
    #[error("repeated eigenvalue {0}")]
    RepeatedEigenvalue(String),
    #[error("intersection matrix has non-real eigenvalues")]
    NonRealEigenvalue,
    #[error("internal error: Q-polynomial criteria disagree on ordering {ordering:?} (definition check {definition}, Krein check {krein})")]
    CriterionDisagreement {
        ordering: Vec<usize>,
        definition: bool,
        krein: bool,
    },
    #[error("excluded parameter: {0}")]
    Excluded(Violation),
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
