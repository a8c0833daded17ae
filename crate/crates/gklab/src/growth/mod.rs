//! Growth sequences: exact ranks of frame powers.
//!
//! For a frame V (a finite set of reduced elements spanning a submodule
//! that contains a nonzero constant), the n-th growth value is the rank
//! over the fraction field of the span of all products of at most n frame
//! elements. Ranks are exact when the rewrite system is confluent; for a
//! terminating but non-confluent system the normal words may be linearly
//! dependent in the algebra, so the sequence is marked upper-bound only.
//!
//! The spanning sets are built breadth-first. Only products that raised
//! the rank are multiplied forward: if p lies in the span of earlier
//! products, every v*p does too, by bilinearity of multiplication and
//! linearity of reduction, so pruning loses nothing.

mod echelon;
mod module_growth;
mod tdeg;

pub use module_growth::{module_growth_sequence, MonomialModule};
pub use tdeg::{
    tdeg_pool_estimate, tdeg_pool_estimate_with_opts, TdegReport, TdegTriple, TDEG_LABEL,
};

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use serde_json::json;

use crate::coeff::Scalar;
use crate::presentation::{NCPoly, Presentation, Word};
use crate::util::fingerprint64;
use echelon::{SparseEchelon, SparseRow};

/// Default cap on the number of distinct spanning products tracked before
/// a computation fails loudly instead of hanging.
pub const DEFAULT_ROW_CAP: usize = 200_000;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GrowthError {
    #[error("spanning set exceeded the row cap of {cap} rows")]
    BudgetExceeded { cap: usize },
    #[error("frame must contain a nonzero constant element")]
    FrameWithoutUnit,
    #[error("element coefficient falls outside the domain {0}")]
    DomainMismatch(String),
    #[error("this computation needs a quasi-commutative presentation")]
    NotQuasiCommutative,
    #[error("`{0}` is not a monomial")]
    NotMonomial(String),
    #[error("`{0}` is not a normal word for this presentation")]
    NotNormal(String),
    #[error("at least one generator monomial is required")]
    EmptyGenerators,
    #[error("candidate elements must be nonzero")]
    ZeroCandidate,
    #[error("frame and candidate pools must be nonempty")]
    EmptyPool,
    #[error(transparent)]
    Analysis(#[from] crate::analysis::AnalysisError),
}

/// A finite spanning set used to build growth sequences. Elements are
/// stored in normal form; some element must be a nonzero constant so that
/// spans of successive powers are nested.
#[derive(Debug, Clone)]
pub struct Frame {
    elements: Vec<NCPoly>,
}

impl Frame {
    /// Reduce, validate, and deduplicate the elements.
    pub fn new(pres: &Presentation, elements: Vec<NCPoly>) -> Result<Frame, GrowthError> {
        let mut reduced: Vec<NCPoly> = Vec::new();
        for e in &elements {
            for (_, c) in e.terms() {
                if !pres.domain().admits(c) {
                    return Err(GrowthError::DomainMismatch(pres.domain().to_string()));
                }
            }
            let r = pres.reduce(e);
            if !r.is_zero() && !reduced.contains(&r) {
                reduced.push(r);
            }
        }
        if !reduced.iter().any(|e| e.is_constant() && !e.is_zero()) {
            return Err(GrowthError::FrameWithoutUnit);
        }
        Ok(Frame { elements: reduced })
    }

    /// The standard generating frame {1, x_1, ..., x_t}.
    pub fn standard(pres: &Presentation) -> Frame {
        let mut elements = vec![NCPoly::one()];
        for i in 0..pres.n_generators() {
            elements.push(NCPoly::monomial(Word::single(i), Scalar::one()));
        }
        Frame { elements }
    }

    pub fn elements(&self) -> &[NCPoly] {
        &self.elements
    }

    pub fn fingerprint(&self, pres: &Presentation) -> String {
        let joined = self
            .elements
            .iter()
            .map(|e| pres.render_poly(e))
            .collect::<Vec<_>>()
            .join(";");
        fingerprint64(joined.as_bytes())
    }
}

/// The computed values d_0..d_N together with fingerprints identifying
/// what was measured. `upper_bound_only` is set when confluence is not
/// certified, in which case ranks bound the true values from above.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSequence {
    pub values: Vec<usize>,
    pub presentation_fingerprint: String,
    pub frame_fingerprint: String,
    pub upper_bound_only: bool,
}

impl GrowthSequence {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,rank\n");
        for (n, d) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{d}\n"));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "presentation_fingerprint": self.presentation_fingerprint,
            "frame_fingerprint": self.frame_fingerprint,
            "upper_bound_only": self.upper_bound_only,
            "values": self.values,
        })
    }
}

/// Growth of the algebra itself: d_n = rank of the span of products of at
/// most n frame elements, computed with the default row cap.
pub fn growth_sequence(
    pres: &Presentation,
    frame: &Frame,
    n_max: usize,
) -> Result<GrowthSequence, GrowthError> {
    growth_sequence_with_cap(pres, frame, n_max, DEFAULT_ROW_CAP)
}

pub fn growth_sequence_with_cap(
    pres: &Presentation,
    frame: &Frame,
    n_max: usize,
    row_cap: usize,
) -> Result<GrowthSequence, GrowthError> {
    let values = growth_core(pres, frame.elements(), n_max, row_cap)?;
    Ok(GrowthSequence {
        values,
        presentation_fingerprint: pres.fingerprint(),
        frame_fingerprint: frame.fingerprint(pres),
        upper_bound_only: !pres.confluence_certified(),
    })
}

/// Growth of the unital subalgebra generated by `gens`: spanning sets are
/// products of at most n of the generators.
pub fn subalgebra_growth(
    pres: &Presentation,
    gens: &[NCPoly],
    n_max: usize,
) -> Result<GrowthSequence, GrowthError> {
    subalgebra_growth_with_cap(pres, gens, n_max, DEFAULT_ROW_CAP)
}

pub fn subalgebra_growth_with_cap(
    pres: &Presentation,
    gens: &[NCPoly],
    n_max: usize,
    row_cap: usize,
) -> Result<GrowthSequence, GrowthError> {
    let mut elements = vec![NCPoly::one()];
    for g in gens {
        for (_, c) in g.terms() {
            if !pres.domain().admits(c) {
                return Err(GrowthError::DomainMismatch(pres.domain().to_string()));
            }
        }
        let r = pres.reduce(g);
        if !r.is_zero() && !elements.contains(&r) {
            elements.push(r);
        }
    }
    let values = growth_core(pres, &elements, n_max, row_cap)?;
    let joined = elements
        .iter()
        .map(|e| pres.render_poly(e))
        .collect::<Vec<_>>()
        .join(";");
    Ok(GrowthSequence {
        values,
        presentation_fingerprint: pres.fingerprint(),
        frame_fingerprint: fingerprint64(format!("subalgebra:{joined}").as_bytes()),
        upper_bound_only: !pres.confluence_certified(),
    })
}

/// Breadth-first span construction. `elements` must contain the constant
/// one (or any nonzero constant); levels hold only the products that
/// raised the rank.
fn growth_core(
    pres: &Presentation,
    elements: &[NCPoly],
    n_max: usize,
    row_cap: usize,
) -> Result<Vec<usize>, GrowthError> {
    let mut columns: HashMap<Word, usize> = HashMap::new();
    let mut echelon = SparseEchelon::new();
    let mut seen: HashSet<NCPoly> = HashSet::new();
    let mut tracked = 0usize;

    let one = NCPoly::one();
    seen.insert(one.clone());
    echelon.insert(to_row(&one, &mut columns));
    let mut values = vec![echelon.rank()];
    let mut level = vec![one];

    for _ in 1..=n_max {
        let mut next = Vec::new();
        for s in &level {
            for v in elements {
                let p = pres.multiply_reduced(v, s);
                if p.is_zero() || !seen.insert(p.clone()) {
                    continue;
                }
                tracked += 1;
                if tracked > row_cap {
                    return Err(GrowthError::BudgetExceeded { cap: row_cap });
                }
                if echelon.insert(to_row(&p, &mut columns)) {
                    next.push(p);
                }
            }
        }
        values.push(echelon.rank());
        level = next;
    }
    Ok(values)
}

fn to_row(p: &NCPoly, columns: &mut HashMap<Word, usize>) -> SparseRow {
    let mut row: SparseRow = p
        .terms()
        .map(|(w, c)| {
            let next = columns.len();
            let col = *columns.entry(w.clone()).or_insert(next);
            (col, c.clone())
        })
        .collect();
    row.sort_by_key(|(c, _)| *c);
    row
}

/// Number of monomials x_1^{a_1}...x_t^{a_t} of total degree at most n:
/// the partial sum of binomials C(t+i-1, i) for i = 0..n.
pub fn standard_monomial_count(t: usize, n: usize) -> BigUint {
    let mut total = BigUint::from(1u32);
    let mut binom = BigUint::from(1u32);
    for i in 1..=n {
        binom = binom * BigUint::from(t + i - 1) / BigUint::from(i);
        total += &binom;
    }
    total
}
