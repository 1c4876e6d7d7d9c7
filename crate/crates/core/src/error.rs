use thiserror::Error;

use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("not specializable: pole at q = {0}")]
    Pole(Rational),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("element is not multihomogeneous")]
    NotMultihomogeneous,

    #[error("zero element has no multidegree")]
    ZeroElement,

    #[error("not a C-point: {0}")]
    NotAPoint(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("not a nonnegative combination of irreducible characters")]
    NotNonnegativeCombination,

    #[error("leg algebra mismatch: {0}")]
    LegMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
