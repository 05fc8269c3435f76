use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("resource limit: degree {degree} exceeds the configured cap {cap}")]
    ResourceLimit { degree: usize, cap: usize },

    #[error("oracle scale exceeded: n = {n} is above the enumeration cap {cap}")]
    OracleScaleExceeded { n: u32, cap: u32 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("accuracy failure in {context}: best estimate {estimate:e} with error {error:e}")]
    Accuracy {
        context: &'static str,
        estimate: f64,
        error: f64,
    },

    #[error("integrity error in {path}: {invariant}", path = path.display())]
    Integrity { path: PathBuf, invariant: String },

    #[error("unknown theorem tag `{0}`")]
    UnknownTag(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for failures that carry a numerical best estimate rather than a
    /// usage or environment problem.
    pub fn is_accuracy_failure(&self) -> bool {
        matches!(self, Error::Accuracy { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
