//! Reduction of words and polynomials modulo the rewrite rules.
//!
//! Rules rewrite strictly downward in degree-lexicographic order, so
//! repeated rewriting terminates regardless of the strategy. We fix one
//! strategy for reproducibility: at each step the leftmost occurrence of
//! any rule's left-hand side is rewritten, and when several rules match
//! at that position the one listed first wins.

use super::{NCPoly, Presentation, Word};
use crate::coeff::Scalar;

impl Presentation {
    /// Locate the leftmost redex in `w`. Returns `(rule_index, position)`
    /// for the earliest position at which some left-hand side occurs;
    /// ties at a position go to the rule listed first.
    pub fn leftmost_redex(&self, w: &Word) -> Option<(usize, usize)> {
        let letters = w.indices();
        for pos in 0..letters.len() {
            for (idx, rule) in self.rules().iter().enumerate() {
                let pat = rule.lhs.indices();
                if pos + pat.len() <= letters.len() && &letters[pos..pos + pat.len()] == pat {
                    return Some((idx, pos));
                }
            }
        }
        None
    }

    /// A word is normal when no left-hand side occurs in it.
    pub fn word_is_normal(&self, w: &Word) -> bool {
        self.leftmost_redex(w).is_none()
    }

    /// Rewrite `w` once, replacing the occurrence of rule `rule_idx`'s
    /// left-hand side at `pos` by its right-hand side.
    pub(super) fn apply_rule_at(&self, w: &Word, rule_idx: usize, pos: usize) -> NCPoly {
        let rule = &self.rules()[rule_idx];
        let letters = w.indices();
        let prefix = &letters[..pos];
        let suffix = &letters[pos + rule.lhs.len()..];
        let mut out = NCPoly::zero();
        for (u, c) in rule.rhs.terms() {
            out.add_term(Word::splice(prefix, u.indices(), suffix), c.clone());
        }
        out
    }

    /// Fully reduce a polynomial. Reduction is a linear map: each word is
    /// rewritten independently and the results are summed, so cancellation
    /// between terms cannot block or redirect later rewriting.
    pub fn reduce(&self, p: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        let mut work: Vec<(Word, Scalar)> = p
            .terms()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        while let Some((w, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            match self.leftmost_redex(&w) {
                None => out.add_term(w, c),
                Some((rule_idx, pos)) => {
                    // Every produced word is strictly smaller than `w`, so
                    // the worklist drains.
                    for (w2, c2) in self.apply_rule_at(&w, rule_idx, pos).terms() {
                        work.push((w2.clone(), &c * c2));
                    }
                }
            }
        }
        out
    }

    /// Reduce a single word.
    pub fn reduce_word(&self, w: &Word) -> NCPoly {
        self.reduce(&NCPoly::monomial(w.clone(), Scalar::one()))
    }

    /// Product in the quotient: multiply in the free algebra, then reduce.
    pub fn multiply_reduced(&self, a: &NCPoly, b: &NCPoly) -> NCPoly {
        self.reduce(&a.mul(b))
    }
}
