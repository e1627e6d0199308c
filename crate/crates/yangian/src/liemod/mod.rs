//! Concrete Lie algebras, truncated weight modules, and graded operators
//! with truncation-window bookkeeping.

pub mod algebra;
pub mod module;
pub mod operator;

pub use algebra::{LieAlgebra, LieElt, LieKey, RootVector};
pub use module::{Mono, MonoVec, SingleSpace, VectorRep, Verma};
pub use operator::{window_check, DepthTuple, Op, Space, Verdict};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),
    #[error("operator is not nilpotent on the certified window")]
    NotNilpotent,
    #[error("construction is inconsistent: {0}")]
    Inconsistent(String),
}
