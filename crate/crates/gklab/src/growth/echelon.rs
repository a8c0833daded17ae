//! Incremental sparse echelon form over the fraction field of the
//! coefficient domain, kept fraction-free: rows hold domain elements and
//! elimination cross-multiplies, so exactness never depends on division.
//! Rank over the fraction field is what growth sequences need; torsion
//! (a row like `2 e_1` against `e_1`) does not count.

use std::collections::HashMap;

use crate::coeff::Scalar;

/// A sparse row: `(column, coefficient)` pairs sorted by column, with no
/// zero coefficients.
pub(crate) type SparseRow = Vec<(usize, Scalar)>;

pub(crate) struct SparseEchelon {
    rows: Vec<SparseRow>,
    pivot_of_col: HashMap<usize, usize>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        SparseEchelon {
            rows: Vec::new(),
            pivot_of_col: HashMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `row` against the stored pivots; if a nonzero remainder is
    /// left, store it as a new pivot row and report a rank increase.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        normalize_content(&mut row);
        loop {
            let Some((pivot_col, _)) = row.first() else {
                return false;
            };
            match self.pivot_of_col.get(pivot_col) {
                None => {
                    self.pivot_of_col.insert(*pivot_col, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
                Some(&r) => {
                    row = eliminate(&row, &self.rows[r]);
                }
            }
        }
    }
}

/// `pivot_lead * row - row_lead * pivot`, which cancels the shared leading
/// column. Dividing out the content keeps entries small.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let row_lead = &row[0].1;
    let pivot_lead = &pivot[0].1;
    let mut out: SparseRow = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let next_row = row.get(i).map(|(c, _)| *c);
        let next_piv = pivot.get(j).map(|(c, _)| *c);
        let entry = match (next_row, next_piv) {
            (Some(a), Some(b)) if a == b => {
                let v = &(pivot_lead * &row[i].1) - &(row_lead * &pivot[j].1);
                i += 1;
                j += 1;
                (a, v)
            }
            (Some(a), Some(b)) if a < b => {
                let v = pivot_lead * &row[i].1;
                i += 1;
                (a, v)
            }
            (Some(a), None) => {
                let v = pivot_lead * &row[i].1;
                i += 1;
                (a, v)
            }
            (_, Some(b)) => {
                let v = -&(row_lead * &pivot[j].1);
                j += 1;
                (b, v)
            }
            (None, None) => unreachable!(),
        };
        if !entry.1.is_zero() {
            out.push(entry);
        }
    }
    normalize_content(&mut out);
    out
}

fn normalize_content(row: &mut SparseRow) {
    let mut content = Scalar::zero();
    for (_, c) in row.iter() {
        content = Scalar::gcd(&content, c);
        if content.is_unit() {
            return;
        }
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    for (_, c) in row.iter_mut() {
        *c = c.div_exact(&content).expect("content divides every entry");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{matrix_rank, DomainSpec, RankMatrix};

    fn int_row(entries: &[(usize, i64)]) -> SparseRow {
        entries
            .iter()
            .map(|(c, v)| (*c, Scalar::from_int(*v)))
            .collect()
    }

    #[test]
    fn torsion_rows_do_not_raise_rank() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(int_row(&[(0, 1)])));
        assert!(!e.insert(int_row(&[(0, 2)])));
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn dependent_combination_is_detected() {
        let mut e = SparseEchelon::new();
        assert!(e.insert(int_row(&[(0, 1), (1, 2)])));
        assert!(e.insert(int_row(&[(1, 3), (2, 1)])));
        // 3*(row1) - 2*(row2) has support {0, 2}; adding it back in any
        // scalar multiple must not raise the rank.
        assert!(!e.insert(int_row(&[(0, 3), (2, -2)])));
        assert!(!e.insert(int_row(&[(0, 6), (2, -4)])));
        assert_eq!(e.rank(), 2);
        // A genuinely new direction still does.
        assert!(e.insert(int_row(&[(2, 5)])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn parameter_rows_use_fraction_field_rank() {
        // (q, 1) and (q^2, q) are proportional over the fraction field.
        let q = Scalar::parameter;
        let mut e = SparseEchelon::new();
        assert!(e.insert(vec![(0, q()), (1, Scalar::one())]));
        assert!(!e.insert(vec![(0, &q() * &q()), (1, q())]));
        assert_eq!(e.rank(), 1);
    }

    #[test]
    fn agrees_with_dense_bareiss_rank() {
        // A fixed 5x4 integer matrix, rank checked both ways.
        let dense: Vec<Vec<i64>> = vec![
            vec![1, 2, 0, -1],
            vec![2, 4, 0, -2],
            vec![0, 1, 1, 1],
            vec![1, 3, 1, 0],
            vec![0, 0, 7, 5],
        ];
        let mut e = SparseEchelon::new();
        for r in &dense {
            let row: SparseRow = r
                .iter()
                .enumerate()
                .filter(|(_, v)| **v != 0)
                .map(|(c, v)| (c, Scalar::from_int(*v)))
                .collect();
            e.insert(row);
        }
        let m = RankMatrix::from_dense(
            dense
                .iter()
                .map(|r| r.iter().map(|v| Scalar::from_int(*v)).collect())
                .collect(),
        )
        .unwrap();
        assert_eq!(e.rank(), matrix_rank(&m, &DomainSpec::Integers).unwrap());
    }
}
