use thiserror::Error;

use crate::symfunc::Basis;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition part {0}: parts must be positive")]
    InvalidPart(i64),

    #[error("{what} limit exceeded: {value} > {limit}")]
    GuardExceeded { what: &'static str, value: usize, limit: usize },

    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(Basis, Basis),

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("operation not supported in the {0} basis")]
    UnsupportedBasis(Basis),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("vertex {vertex} out of range for graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
