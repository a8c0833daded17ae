//! Growth of cyclic-by-monomial right modules over quasi-commutative
//! presentations.
//!
//! Quasi-commutative straightening sends any product of generators to a
//! nonzero scalar multiple of the sorted word with the same exponent
//! vector, so monomials can be identified with exponent vectors and a
//! monomial right ideal with an upward-closed set of exponents. The rank
//! of F*V^n is then a count: exponents reachable from a generator by
//! adding at most n frame exponents, minus those divisible by an
//! annihilator.

use std::collections::HashSet;

use super::{Frame, GrowthError, GrowthSequence};
use crate::presentation::{Presentation, Word};
use crate::util::fingerprint64;

/// A right module presented by monomial data: the span of
/// `generator_monomials` inside the quotient of the algebra by the right
/// ideal generated by `annihilator_monomials`.
#[derive(Debug, Clone)]
pub struct MonomialModule {
    annihilators: Vec<Word>,
    generators: Vec<Word>,
}

impl MonomialModule {
    /// Validate the monomial data against a quasi-commutative
    /// presentation: every word must be normal, and at least one
    /// generator is required.
    pub fn new(
        pres: &Presentation,
        annihilators: Vec<Word>,
        generators: Vec<Word>,
    ) -> Result<Self, GrowthError> {
        if !pres.validate_pbw_shape().quasi_commutative {
            return Err(GrowthError::NotQuasiCommutative);
        }
        if generators.is_empty() {
            return Err(GrowthError::EmptyGenerators);
        }
        for w in annihilators.iter().chain(generators.iter()) {
            if !pres.word_is_normal(w) {
                return Err(GrowthError::NotNormal(pres.render_word(w)));
            }
        }
        Ok(MonomialModule {
            annihilators,
            generators,
        })
    }

    pub fn annihilator_monomials(&self) -> &[Word] {
        &self.annihilators
    }

    pub fn generator_monomials(&self) -> &[Word] {
        &self.generators
    }

    pub fn fingerprint(&self, pres: &Presentation) -> String {
        let ann = self
            .annihilators
            .iter()
            .map(|w| pres.render_word(w))
            .collect::<Vec<_>>()
            .join(",");
        let gens = self
            .generators
            .iter()
            .map(|w| pres.render_word(w))
            .collect::<Vec<_>>()
            .join(",");
        fingerprint64(format!("module:ann={ann};gens={gens}").as_bytes())
    }
}

/// d_n = number of surviving exponent vectors reachable from a generator
/// with at most n frame factors. Killed exponents stay killed under
/// further multiplication, so they are neither counted nor expanded.
pub fn module_growth_sequence(
    pres: &Presentation,
    module: &MonomialModule,
    frame: &Frame,
    n_max: usize,
) -> Result<GrowthSequence, GrowthError> {
    if !pres.validate_pbw_shape().quasi_commutative {
        return Err(GrowthError::NotQuasiCommutative);
    }
    let t = pres.n_generators();
    let mut frame_exps: Vec<Vec<usize>> = Vec::new();
    for e in frame.elements() {
        let Some((w, _)) = e.as_monomial() else {
            return Err(GrowthError::NotMonomial(pres.render_poly(e)));
        };
        if !pres.word_is_normal(w) {
            return Err(GrowthError::NotNormal(pres.render_word(w)));
        }
        frame_exps.push(w.exponents(t));
    }
    let ann_exps: Vec<Vec<usize>> = module
        .annihilators
        .iter()
        .map(|w| w.exponents(t))
        .collect();
    let killed = |e: &[usize]| {
        ann_exps
            .iter()
            .any(|a| a.iter().zip(e).all(|(ai, ei)| ei >= ai))
    };

    let mut alive: HashSet<Vec<usize>> = HashSet::new();
    let mut level: Vec<Vec<usize>> = Vec::new();
    for g in &module.generators {
        let e = g.exponents(t);
        if !killed(&e) && alive.insert(e.clone()) {
            level.push(e);
        }
    }
    let mut values = vec![alive.len()];
    for _ in 1..=n_max {
        let mut next = Vec::new();
        for e in &level {
            for f in &frame_exps {
                let sum: Vec<usize> = e.iter().zip(f).map(|(a, b)| a + b).collect();
                if !killed(&sum) && alive.insert(sum.clone()) {
                    next.push(sum);
                }
            }
        }
        values.push(alive.len());
        level = next;
    }

    Ok(GrowthSequence {
        values,
        presentation_fingerprint: pres.fingerprint(),
        frame_fingerprint: fingerprint64(
            format!(
                "{};frame={}",
                module.fingerprint(pres),
                frame.fingerprint(pres)
            )
            .as_bytes(),
        ),
        upper_bound_only: !pres.confluence_certified(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::growth::Frame;

    fn commutative_plane() -> Presentation {
        Presentation::parse(
            "domain: Z\ngenerators: x y\nrule: y x -> x y\nflags: pbw commutative\n",
        )
        .unwrap()
    }

    fn std_frame(pres: &Presentation) -> Frame {
        Frame::standard(pres)
    }

    fn words(pres: &Presentation, specs: &[&str]) -> Vec<Word> {
        specs.iter().map(|s| pres.parse_word(s).unwrap()).collect()
    }

    #[test]
    fn killing_y_leaves_univariate_growth() {
        let p = commutative_plane();
        let m = MonomialModule::new(&p, words(&p, &["y"]), words(&p, &["1"])).unwrap();
        let seq = module_growth_sequence(&p, &m, &std_frame(&p), 3).unwrap();
        assert_eq!(seq.values, vec![1, 2, 3, 4]);
        assert!(!seq.upper_bound_only);
    }

    #[test]
    fn killing_both_generators_leaves_the_base() {
        let p = commutative_plane();
        let m = MonomialModule::new(&p, words(&p, &["x", "y"]), words(&p, &["1"])).unwrap();
        let seq = module_growth_sequence(&p, &m, &std_frame(&p), 3).unwrap();
        assert_eq!(seq.values, vec![1, 1, 1, 1]);
    }

    #[test]
    fn quantum_plane_band_module() {
        let p =
            Presentation::parse("domain: Z[q]\ngenerators: x y\nrule: y x -> q x y\nflags: pbw\n")
                .unwrap();
        let m = MonomialModule::new(&p, words(&p, &["x^2"]), words(&p, &["1"])).unwrap();
        let seq = module_growth_sequence(&p, &m, &std_frame(&p), 3).unwrap();
        assert_eq!(seq.values, vec![1, 3, 5, 7]);
    }

    #[test]
    fn weyl_is_not_quasi_commutative() {
        let p = Presentation::parse("domain: Z\ngenerators: x y\nrule: y x -> x y + 1\n").unwrap();
        assert!(matches!(
            MonomialModule::new(&p, vec![], vec![Word::one()]),
            Err(GrowthError::NotQuasiCommutative)
        ));
    }

    #[test]
    fn annihilators_must_be_normal() {
        let p = commutative_plane();
        let yx = Word::from_indices(vec![1, 0]);
        assert!(matches!(
            MonomialModule::new(&p, vec![yx], vec![Word::one()]),
            Err(GrowthError::NotNormal(_))
        ));
    }

    #[test]
    fn module_growth_never_exceeds_algebra_growth() {
        let p = commutative_plane();
        let m = MonomialModule::new(&p, words(&p, &["x^3"]), words(&p, &["1"])).unwrap();
        let frame = std_frame(&p);
        let module = module_growth_sequence(&p, &m, &frame, 5).unwrap();
        let algebra = crate::growth::growth_sequence(&p, &frame, 5).unwrap();
        for (md, ad) in module.values.iter().zip(algebra.values.iter()) {
            assert!(md <= ad);
        }
    }

    #[test]
    fn empty_generator_list_is_rejected() {
        let p = commutative_plane();
        assert!(matches!(
            MonomialModule::new(&p, vec![], vec![]),
            Err(GrowthError::EmptyGenerators)
        ));
    }

    #[test]
    fn multiple_generators_merge_their_cones() {
        // F = {x, y} over the full plane: reachable exponents are every
        // (a, b) with a + b <= n + 1 except the origin.
        let p = commutative_plane();
        let m = MonomialModule::new(&p, vec![], words(&p, &["x", "y"])).unwrap();
        let seq = module_growth_sequence(&p, &m, &std_frame(&p), 3).unwrap();
        assert_eq!(seq.values, vec![2, 5, 9, 14]);
    }
}
