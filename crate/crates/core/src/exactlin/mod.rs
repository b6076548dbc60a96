//! Exact scalars, formal linear combinations and dense rational linear algebra.
//!
//! Everything downstream works over the rationals: identities in this crate are
//! checked with zero tolerance, so there is no floating-point path anywhere.

mod lincomb;
mod matrix;
mod rational;

pub use lincomb::LinComb;
pub use matrix::{kernel_basis, matrix_rank, same_span, LinAlgError, RatMatrix, Rref};
pub use rational::{ParseRationalError, Rational};
