//! Exact coefficient arithmetic and rank computation.
//!
//! Two coefficient domains are supported: the integers `Z` and univariate
//! integer polynomials `Z[q]` in a named parameter. Both are commutative
//! domains, so matrices over them have a well-defined rank over the
//! fraction field (the rationals, respectively rational functions in the
//! parameter). Rank over the fraction field is what growth sequences
//! count; torsion does not contribute.

mod fraction;
mod matrix;
mod scalar;

pub use fraction::{fraction_normalize, Fraction};
pub use matrix::{matrix_rank, RankMatrix};
pub use scalar::{DomainSpec, Scalar};

use thiserror::Error;

/// Errors from coefficient arithmetic and matrix construction.
#[derive(Debug, Error)]
pub enum CoeffError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("matrix entry ({row}, {col}) is out of bounds")]
    EntryOutOfBounds { row: usize, col: usize },
    #[error("matrix entry ({row}, {col}) is zero; sparse entries must be nonzero")]
    ZeroEntry { row: usize, col: usize },
    #[error("matrix entry ({row}, {col}) is stored twice")]
    DuplicateEntry { row: usize, col: usize },
    #[error("matrix entry ({row}, {col}) does not lie in the domain {domain}")]
    DomainMismatch {
        row: usize,
        col: usize,
        domain: String,
    },
}
