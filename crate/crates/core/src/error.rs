use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: &'static str },

    #[error("dominance compares partitions of equal size, got {left} and {right}")]
    UnequalTotals { left: usize, right: usize },

    #[error("invalid signed Young diagram: {0}")]
    InvalidDiagram(String),

    #[error("unsupported algebra {0}")]
    UnsupportedAlgebra(String),

    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("{orbit} is not a nilpotent orbit index of {algebra}")]
    InvalidOrbit { algebra: String, orbit: String },

    #[error("{0} is not a simple algebra")]
    NotSimple(String),

    #[error("{0} is not a complex algebra")]
    NotComplex(String),

    #[error("maximal orbit of {0} is not unique")]
    NonUniqueMaximum(String),

    #[error("matrix does not lie in {0}")]
    NotInAlgebra(String),

    #[error("element {0} is not in the poset")]
    UnknownElement(String),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
