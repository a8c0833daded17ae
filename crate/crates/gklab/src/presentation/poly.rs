//! Noncommutative polynomials: finite formal sums of words with nonzero
//! scalar coefficients. Coefficients are central, so they commute past the
//! generators.

use std::collections::BTreeMap;

use super::word::Word;
use crate::coeff::Scalar;

/// A polynomial in noncommuting generators. The map never stores a zero
/// coefficient, and iteration is in ascending degree-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::monomial(Word::one(), c)
    }

    pub fn monomial(w: Word, c: Scalar) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Option<&Scalar> {
        self.terms.get(w)
    }

    /// Length of the longest word; zero for the zero polynomial.
    pub fn max_degree(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    /// The single term of a monomial, if the polynomial has exactly one.
    pub fn as_monomial(&self) -> Option<(&Word, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Word::is_empty)
    }

    /// Add `c · w`, dropping the entry if the total cancels.
    pub fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> NCPoly {
        NCPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> NCPoly {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .collect(),
        }
    }

    /// Free product: concatenates words pairwise. Reduction is a separate
    /// step owned by the presentation.
    pub fn mul(&self, rhs: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in rhs.terms() {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Render with generator names and the domain parameter, leading term
    /// first.
    pub fn render(&self, names: &[String], param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in self.terms.iter().rev() {
            let (sign_negative, body) = render_term(w, c, names, param);
            if out.is_empty() {
                if sign_negative {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if sign_negative { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

/// Split a term into a leading sign and an unsigned rendering. Scalars
/// with several parameter powers stay parenthesized and keep their sign
/// inside the parentheses.
fn render_term(w: &Word, c: &Scalar, names: &[String], param: &str) -> (bool, String) {
    let multi_term = c.render(param).contains(" + ") || c.render(param).contains(" - ");
    if multi_term {
        let body = format!("({})", c.render(param));
        return if w.is_empty() {
            (false, body)
        } else {
            (false, format!("{} {}", body, w.render(names)))
        };
    }
    let rendered = c.render(param);
    let (neg, mag) = match rendered.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, rendered),
    };
    if w.is_empty() {
        (neg, mag)
    } else if mag == "1" {
        (neg, w.render(names))
    } else {
        (neg, format!("{} {}", mag, w.render(names)))
    }
}

impl std::fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let names: Vec<String> = (0..16).map(|i| format!("g{i}")).collect();
        write!(f, "NCPoly({})", self.render(&names, "q"))
    }
}
