//! Error types shared across the crate.

use thiserror::Error;

/// A single violated law, with enough context to locate the offending cells.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AxiomFailure {
    /// Short machine-readable name of the violated law, e.g. `"interchange"`.
    pub law: String,
    /// Human-readable description naming the cells involved.
    pub details: String,
}

impl std::fmt::Display for AxiomFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: {}", self.law, self.details)
    }
}

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Structural problem: an index out of range, a missing table entry for a
    /// composable pair, mismatched boundaries in input data, and the like.
    #[error("structural error: {0}")]
    Structure(String),

    /// One or more category/functor/transformation laws failed.
    #[error("axiom failure: {}", .0.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; "))]
    Axioms(Vec<AxiomFailure>),

    /// An enumeration or closure computation exceeded its configured budget.
    #[error("resource budget exhausted: {0}")]
    Budget(String),

    /// A requested cell or construction does not exist.
    #[error("not found: {0}")]
    NotFound(String),

    /// Malformed user input (CLI / JSON level).
    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub fn structure(msg: impl Into<String>) -> Self {
        Error::Structure(msg.into())
    }

    pub fn axiom(law: impl Into<String>, details: impl Into<String>) -> Self {
        Error::Axioms(vec![AxiomFailure {
            law: law.into(),
            details: details.into(),
        }])
    }
}

pub type Result<T> = std::result::Result<T, Error>;
