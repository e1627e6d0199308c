//! Exact scalar arithmetic and sparse linear algebra over abstract basis keys.

pub mod scalar;
pub mod sparse;

pub use scalar::{parse_rational, Param, Poly, Scalar, PARAM_COUNT};
pub use sparse::{SparseMat, SparseVec};

use thiserror::Error;

/// Errors from the exact-arithmetic layer.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial division is not exact")]
    NotDivisible,
    #[error("matrices have mismatched key domains")]
    KeyDomainMismatch,
    #[error("not a valid rational: {0}")]
    BadRational(String),
}
