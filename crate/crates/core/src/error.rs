//! Error types shared by all modules.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph is disconnected: vertex {0} unreachable")]
    DisconnectedGraph(usize),
    #[error("cycle enumeration exceeded budget of {0}")]
    CycleBudgetExceeded(u64),
    #[error("enumeration exceeded size budget: {0}")]
    SizeBudgetExceeded(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("linear system is singular")]
    SingularSystem,
    #[error("rational function has a pole at the origin")]
    PoleAtOrigin,
    #[error("interpolation points are not distinct")]
    DuplicatePoints,
    #[error("labeling is not facet-defining: {0}")]
    NotAFacet(String),
    #[error("invalid bad-word set: {0}")]
    InvalidBadWordSet(String),
    #[error("loops are not supported: edge {0} is a loop")]
    LoopsUnsupported(usize),
    #[error("polynomial division left a nonzero remainder")]
    NonDivisible,
    #[error("formula produced a non-integral value: {0}")]
    NonIntegralResult(String),
    #[error("word does not encode a wheel facet: {0}")]
    NotAFacetWord(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}

impl Error {
    /// Stable machine-readable name of the error type.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DisconnectedGraph(_) => "DisconnectedGraph",
            Error::CycleBudgetExceeded(_) => "CycleBudgetExceeded",
            Error::SizeBudgetExceeded(_) => "SizeBudgetExceeded",
            Error::DivisionByZeroPolynomial => "DivisionByZeroPolynomial",
            Error::SingularSystem => "SingularSystem",
            Error::PoleAtOrigin => "PoleAtOrigin",
            Error::DuplicatePoints => "DuplicatePoints",
            Error::NotAFacet(_) => "NotAFacet",
            Error::InvalidBadWordSet(_) => "InvalidBadWordSet",
            Error::LoopsUnsupported(_) => "LoopsUnsupported",
            Error::NonDivisible => "NonDivisible",
            Error::NonIntegralResult(_) => "NonIntegralResult",
            Error::NotAFacetWord(_) => "NotAFacetWord",
            Error::InvalidGraph(_) => "InvalidGraph",
        }
    }
}
