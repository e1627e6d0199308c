//! Exact-arithmetic engine for Yangians of finite and affine type-A
//! Kac-Moody algebras.
//!
//! The crate builds root systems, depth-truncated category-O modules,
//! evaluation modules, Casimir operator series, and the coproduct on tensor
//! modules, and verifies the defining and derived operator relations as
//! exact identities of sparse matrices over the rationals (optionally with
//! symbolic parameters). Every verdict is exact: a relation either holds
//! bit-for-bit on a certified truncation window, fails with a concrete
//! nonzero witness entry, or is reported inconclusive when the window is
//! empty.

#![allow(clippy::needless_range_loop)]

pub mod coprod;
pub mod exact;
pub mod liemod;
pub mod rootdata;
pub mod verify;
pub mod yangops;

pub use exact::{Param, Scalar};
pub use liemod::{Op, Space, Verdict};
pub use rootdata::{AlgebraId, RootDatum, Weight};
