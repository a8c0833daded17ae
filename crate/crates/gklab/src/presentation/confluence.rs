//! Overlap-ambiguity confluence checking.
//!
//! The rewrite rules always terminate (they strictly descend in the word
//! order), so the system is confluent exactly when every ambiguity
//! resolves: whenever two rule applications compete for the same word,
//! both reduction branches must reach the same normal form. Two words can
//! compete in two ways: a proper suffix of one left-hand side equals a
//! proper prefix of another (overlap), or one left-hand side contains
//! another (inclusion). Every such word has length at most
//! `len_a + len_b - 1`, so enumerating up to twice the longest left-hand
//! side is exhaustive and certifies confluence outright.

use super::{NCPoly, Presentation, Word};

/// One critical pair: a word that two rule applications compete for,
/// together with the normal forms of both branches.
#[derive(Debug, Clone)]
pub struct Ambiguity {
    /// The contested word.
    pub overlap_word: Word,
    /// Index of the rule applied at the start of the word.
    pub rule_a: usize,
    /// Index of the rule applied at the competing position.
    pub rule_b: usize,
    /// Normal form reached through `rule_a`.
    pub reduction_a: NCPoly,
    /// Normal form reached through `rule_b`.
    pub reduction_b: NCPoly,
    /// Whether the two normal forms agree.
    pub resolved: bool,
}

impl Presentation {
    /// Enumerate every ambiguity whose contested word has length at most
    /// `max_overlap_degree` and reduce both branches. Caps below the
    /// longest left-hand side are raised to it so inclusion ambiguities
    /// are never silently skipped. An empty or fully resolved list
    /// certifies confluence up to the cap; with a cap of at least
    /// `2 * max_rule_lhs_len() - 1` it certifies confluence outright.
    pub fn confluence_check(&self, max_overlap_degree: usize) -> Vec<Ambiguity> {
        let cap = max_overlap_degree.max(self.max_rule_lhs_len());
        let mut out = Vec::new();
        for (a, rule_a) in self.rules().iter().enumerate() {
            let la = rule_a.lhs.len();
            for (b, rule_b) in self.rules().iter().enumerate() {
                let lb = rule_b.lhs.len();
                // Overlap: the last k letters of lhs_a are the first k
                // letters of lhs_b, with k proper on both sides.
                for k in 1..la.min(lb) {
                    if la + lb - k > cap {
                        continue;
                    }
                    if rule_a.lhs.indices()[la - k..] != rule_b.lhs.indices()[..k] {
                        continue;
                    }
                    let word = Word::splice(
                        rule_a.lhs.indices(),
                        &rule_b.lhs.indices()[k..],
                        &[],
                    );
                    out.push(self.resolve(word, a, 0, b, la - k));
                }
                // Inclusion: lhs_b occurs inside lhs_a.
                if a != b && lb <= la && la <= cap {
                    for pos in 0..=la - lb {
                        if rule_a.lhs.indices()[pos..pos + lb] == *rule_b.lhs.indices() {
                            out.push(self.resolve(rule_a.lhs.clone(), a, 0, b, pos));
                        }
                    }
                }
            }
        }
        out.sort_by(|x, y| {
            (&x.overlap_word, x.rule_a, x.rule_b).cmp(&(&y.overlap_word, y.rule_a, y.rule_b))
        });
        out
    }

    fn resolve(&self, word: Word, a: usize, pos_a: usize, b: usize, pos_b: usize) -> Ambiguity {
        let reduction_a = self.reduce(&self.apply_rule_at(&word, a, pos_a));
        let reduction_b = self.reduce(&self.apply_rule_at(&word, b, pos_b));
        let resolved = reduction_a == reduction_b;
        Ambiguity {
            overlap_word: word,
            rule_a: a,
            rule_b: b,
            reduction_a,
            reduction_b,
            resolved,
        }
    }

    /// Certify confluence by exhausting every possible ambiguity.
    pub fn confluence_certified(&self) -> bool {
        let cap = (2 * self.max_rule_lhs_len()).saturating_sub(1);
        self.confluence_check(cap).iter().all(|amb| amb.resolved)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weyl_has_no_ambiguities() {
        let p = Presentation::parse("domain: Z\ngenerators: x y\nrule: y x -> x y + 1\n").unwrap();
        assert!(p.confluence_check(6).is_empty());
        assert!(p.confluence_certified());
    }

    #[test]
    fn absorbing_pair_fails_at_xyx() {
        let p = Presentation::parse(
            "domain: Z\ngenerators: x y\nrule: x y -> x\nrule: y x -> y\n",
        )
        .unwrap();
        let ambs = p.confluence_check(6);
        let at_xyx: Vec<_> = ambs
            .iter()
            .filter(|amb| !amb.resolved && p.render_word(&amb.overlap_word) == "x y x")
            .collect();
        assert_eq!(at_xyx.len(), 1);
        let amb = at_xyx[0];
        assert_eq!(p.render_poly(&amb.reduction_a), "x^2");
        assert_eq!(p.render_poly(&amb.reduction_b), "x");
        assert!(!p.confluence_certified());
    }

    #[test]
    fn commutative_three_generator_system_resolves() {
        let p = Presentation::parse(
            "domain: Z\ngenerators: x y z\n\
             rule: y x -> x y\nrule: z x -> x z\nrule: z y -> y z\n\
             flags: pbw commutative\n",
        )
        .unwrap();
        let ambs = p.confluence_check(6);
        assert_eq!(ambs.len(), 1);
        let amb = &ambs[0];
        assert_eq!(p.render_word(&amb.overlap_word), "z y x");
        assert!(amb.resolved);
        assert_eq!(p.render_poly(&amb.reduction_a), "x y z");
        assert!(p.confluence_certified());
    }

    #[test]
    fn self_overlap_is_detected() {
        // x x -> 0 overlaps itself at x x x; both branches reach zero.
        let p = Presentation::parse("domain: Z\ngenerators: x\nrule: x x -> 0\n").unwrap();
        let ambs = p.confluence_check(3);
        assert_eq!(ambs.len(), 1);
        assert_eq!(ambs[0].rule_a, 0);
        assert_eq!(ambs[0].rule_b, 0);
        assert_eq!(ambs[0].overlap_word.len(), 3);
        assert!(ambs[0].resolved);
    }

    #[test]
    fn inclusion_ambiguities_are_enumerated() {
        // y x y contains y x; the shorter rule gives a conflicting result.
        let p = Presentation::parse(
            "domain: Z\ngenerators: x y\nrule: y x y -> x\nrule: y x -> x y\n",
        )
        .unwrap();
        let ambs = p.confluence_check(6);
        let inclusion: Vec<_> = ambs
            .iter()
            .filter(|amb| amb.rule_a == 0 && amb.rule_b == 1)
            .collect();
        assert!(!inclusion.is_empty());
        assert!(inclusion.iter().any(|amb| !amb.resolved));
    }

    #[test]
    fn low_caps_are_raised_to_the_longest_lhs() {
        let p = Presentation::parse(
            "domain: Z\ngenerators: x y\nrule: y x y -> x\nrule: y x -> x y\n",
        )
        .unwrap();
        // A cap of 1 still sees the inclusion inside the length-3 lhs.
        assert!(p
            .confluence_check(1)
            .iter()
            .any(|amb| amb.overlap_word.len() == 3));
    }

    #[test]
    fn quantum_plane_is_confluent() {
        let p = Presentation::parse("domain: Z[q]\ngenerators: x y\nrule: y x -> q x y\n").unwrap();
        assert!(p.confluence_certified());
    }
}
