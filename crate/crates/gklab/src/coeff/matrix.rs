//! Sparse matrices over a coefficient domain and exact rank over its
//! fraction field.

use std::collections::HashSet;

use super::scalar::{DomainSpec, Scalar};
use super::CoeffError;

/// A sparse matrix in coordinate form. Stored entries are nonzero, row and
/// column indices are in bounds, and no position is stored twice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Scalar)>,
}

impl RankMatrix {
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<(usize, usize, Scalar)>,
    ) -> Result<Self, CoeffError> {
        let mut seen = HashSet::new();
        for (r, c, s) in &entries {
            if *r >= rows || *c >= cols {
                return Err(CoeffError::EntryOutOfBounds { row: *r, col: *c });
            }
            if s.is_zero() {
                return Err(CoeffError::ZeroEntry { row: *r, col: *c });
            }
            if !seen.insert((*r, *c)) {
                return Err(CoeffError::DuplicateEntry { row: *r, col: *c });
            }
        }
        Ok(RankMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// Build from dense rows, skipping zero entries.
    pub fn from_dense(dense: Vec<Vec<Scalar>>) -> Result<Self, CoeffError> {
        let rows = dense.len();
        let cols = dense.iter().map(Vec::len).max().unwrap_or(0);
        let mut entries = Vec::new();
        for (r, row) in dense.into_iter().enumerate() {
            for (c, s) in row.into_iter().enumerate() {
                if !s.is_zero() {
                    entries.push((r, c, s));
                }
            }
        }
        RankMatrix::new(rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, Scalar)] {
        &self.entries
    }

    pub fn transpose(&self) -> RankMatrix {
        RankMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(r, c, s)| (*c, *r, s.clone()))
                .collect(),
        }
    }

    fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut dense = vec![vec![Scalar::zero(); self.cols]; self.rows];
        for (r, c, s) in &self.entries {
            dense[*r][*c] = s.clone();
        }
        dense
    }
}

/// Rank of the matrix over the fraction field of `domain`.
///
/// Fraction-free elimination: each update is a two-by-two cross product
/// divided exactly by the previous pivot, so every intermediate value stays
/// in the domain. Pivots are chosen as the first nonzero entry in column
/// order, and torsion never contributes (a row of twos has rank one).
pub fn matrix_rank(m: &RankMatrix, domain: &DomainSpec) -> Result<usize, CoeffError> {
    for (r, c, s) in &m.entries {
        if !domain.admits(s) {
            return Err(CoeffError::DomainMismatch {
                row: *r,
                col: *c,
                domain: domain.to_string(),
            });
        }
    }
    let mut a = m.to_dense();
    let rows = m.rows;
    let cols = m.cols;
    let mut rank = 0usize;
    let mut prev = Scalar::one();
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let t = &(&a[rank][col] * &a[r][c]) - &(&a[r][col] * &a[rank][c]);
                a[r][c] = t
                    .div_exact(&prev)
                    .expect("fraction-free elimination stays divisible");
            }
            a[r][col] = Scalar::zero();
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    Ok(rank)
}
