//! Shape validation for skew PBW presentations.
//!
//! The shape asks that for every generator pair `i < j` there is exactly
//! one rule `x_j x_i -> c x_i x_j + (linear terms) + (constant)` with a
//! nonzero leading constant `c`, and no other rules. Two refinements are
//! reported alongside: quasi-commutativity (each right-hand side is just
//! `c x_i x_j`) and whether every `c` is a unit of the coefficient ring.

use std::collections::BTreeMap;

use super::Presentation;

/// Outcome of `validate_pbw_shape`, with human-readable notes for every
/// failed check.
#[derive(Debug, Clone)]
pub struct PbwReport {
    pub pbw_shape: bool,
    pub quasi_commutative: bool,
    pub bijective_constants: bool,
    pub notes: Vec<String>,
}

impl Presentation {
    /// Check whether the rules have skew PBW shape; see the module notes.
    pub fn validate_pbw_shape(&self) -> PbwReport {
        let mut notes = Vec::new();
        let mut shape = true;
        let mut quasi = true;
        let mut units = true;
        // (i, j) with i < j, mapped to the rule index that straightens it.
        let mut covered: BTreeMap<(usize, usize), usize> = BTreeMap::new();

        for (idx, rule) in self.rules().iter().enumerate() {
            let letters = rule.lhs.indices();
            let (j, i) = match letters {
                [j, i] if j > i => (*j, *i),
                _ => {
                    shape = false;
                    notes.push(format!(
                        "rule {} left-hand side `{}` is not x_j x_i with j > i",
                        idx + 1,
                        self.render_word(&rule.lhs)
                    ));
                    continue;
                }
            };
            if let Some(first) = covered.insert((i, j), idx) {
                shape = false;
                notes.push(format!(
                    "rules {} and {} both straighten `{}`",
                    first + 1,
                    idx + 1,
                    self.render_word(&rule.lhs)
                ));
                continue;
            }
            let sorted = super::Word::from_indices(vec![i, j]);
            let leading = rule.rhs.coefficient(&sorted);
            match leading {
                Some(c) => {
                    if !c.is_unit() {
                        units = false;
                        notes.push(format!(
                            "rule {} constant {} is not a unit",
                            idx + 1,
                            c.render(self.parameter())
                        ));
                    }
                }
                None => {
                    shape = false;
                    notes.push(format!(
                        "rule {} right-hand side drops the leading word `{}`",
                        idx + 1,
                        self.render_word(&sorted)
                    ));
                }
            }
            for (w, _) in rule.rhs.terms() {
                if w.len() >= 2 && w != &sorted {
                    shape = false;
                    notes.push(format!(
                        "rule {} keeps the quadratic word `{}` on the right-hand side",
                        idx + 1,
                        self.render_word(w)
                    ));
                }
            }
            // Linear and constant tails are fine for the shape but break
            // quasi-commutativity.
            if rule.rhs.num_terms() != 1 || leading.is_none() {
                quasi = false;
            }
        }

        let n = self.n_generators();
        for i in 0..n {
            for j in i + 1..n {
                if !covered.contains_key(&(i, j)) {
                    shape = false;
                    notes.push(format!(
                        "no rule straightens `{} {}`",
                        self.generators()[j],
                        self.generators()[i]
                    ));
                }
            }
        }

        if !shape {
            quasi = false;
            units = false;
        }
        PbwReport {
            pbw_shape: shape,
            quasi_commutative: quasi,
            bijective_constants: units,
            notes,
        }
    }
}
