//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {series}{rank}")]
    InvalidCartanType { series: char, rank: usize },

    #[error("dimension mismatch: expected vectors of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unknown real form id '{0}'")]
    UnknownRealForm(String),

    #[error("diagram has black nodes; restriction is only implemented for quasi-split forms")]
    UnsupportedDiagram,

    #[error("cascade ambiguity: no canonical choice among {0} candidates")]
    CascadeAmbiguity(usize),

    #[error("integrity failure in {context}: {detail}")]
    Integrity { context: String, detail: String },

    #[error("square-integrability failure: layer {layer} Pfaffian vanishes")]
    PfaffianZero { layer: usize },

    #[error("group construction error: {0}")]
    Group(String),

    #[error("fixture error for '{form}': {detail}")]
    Fixture { form: String, detail: String },

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn integrity(context: &str, detail: impl Into<String>) -> Self {
        Error::Integrity {
            context: context.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
