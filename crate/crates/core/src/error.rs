use thiserror::Error;

use crate::field::FieldSpec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: FieldSpec, right: FieldSpec },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("cannot enumerate the elements of an infinite field ({0})")]
    InfiniteField(FieldSpec),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("ternion {0} is not a unit")]
    NonUnit(String),

    #[error("expected a 3-dimensional subspace, got rank {0}")]
    Rank(usize),

    #[error("zero vector has no projective point")]
    ZeroVector,

    #[error("invalid index triple ({0}, {1}, {2})")]
    InvalidTriple(usize, usize, usize),

    #[error("point violates linear condition {0}")]
    NotInAmbient(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("point is not on the variety")]
    NotOnVariety,
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.into(),
            reason: reason.into(),
        }
    }
}
