//! Finitely presented algebras given by generators and rewrite rules.
//!
//! A presentation fixes a coefficient domain, an ordered list of
//! generators, and a list of rewrite rules `lhs -> rhs` where `lhs` is a
//! word of length at least two and every word of `rhs` is strictly smaller
//! in degree-lexicographic order. Descent makes every reduction terminate;
//! whether reduction is confluent is a separate question answered by
//! [`Presentation::confluence_check`].

mod confluence;
mod parse;
mod pbw;
mod poly;
mod rewrite;
mod word;

pub use confluence::Ambiguity;
pub use pbw::PbwReport;
pub use poly::NCPoly;
pub use word::Word;

use crate::coeff::DomainSpec;
use crate::util::fingerprint64;
use thiserror::Error;

/// Errors from loading a presentation or parsing polynomial expressions.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{line}:{col}: syntax error: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}: ordering violation: {message}")]
    OrderingViolation { line: usize, message: String },
    #[error("{line}:{col}: unknown generator `{name}`")]
    UnknownGenerator {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("{line}:{col}: domain mismatch: {message}")]
    DomainMismatch {
        line: usize,
        col: usize,
        message: String,
    },
}

/// A rewrite rule `lhs -> rhs`. The left-hand side is a word of length at
/// least two; every word on the right-hand side is strictly smaller than
/// `lhs` in degree-lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: NCPoly,
}

/// A finitely presented algebra over a coefficient domain.
#[derive(Debug, Clone)]
pub struct Presentation {
    domain: DomainSpec,
    generators: Vec<String>,
    rules: Vec<RewriteRule>,
    claims_pbw: bool,
    claims_commutative: bool,
}

impl Presentation {
    /// Assemble a presentation, validating the rule invariants. Rules keep
    /// the order they are given in; reduction tries them in that order.
    pub fn new(
        domain: DomainSpec,
        generators: Vec<String>,
        rules: Vec<RewriteRule>,
        claims_pbw: bool,
        claims_commutative: bool,
    ) -> Result<Self, ParseError> {
        let pres = Presentation {
            domain,
            generators,
            rules,
            claims_pbw,
            claims_commutative,
        };
        for (idx, rule) in pres.rules.iter().enumerate() {
            pres.validate_rule(rule, idx + 1)?;
        }
        Ok(pres)
    }

    fn validate_rule(&self, rule: &RewriteRule, line: usize) -> Result<(), ParseError> {
        if rule.lhs.len() < 2 {
            return Err(ParseError::Syntax {
                line,
                col: 0,
                message: "rule left-hand side must be a word of length at least two".into(),
            });
        }
        for (w, c) in rule.rhs.terms() {
            if *w >= rule.lhs {
                return Err(ParseError::OrderingViolation {
                    line,
                    message: format!(
                        "right-hand side word `{}` is not smaller than the left-hand side `{}`",
                        w.render(&self.generators),
                        rule.lhs.render(&self.generators)
                    ),
                });
            }
            if !self.domain.admits(c) {
                return Err(ParseError::DomainMismatch {
                    line,
                    col: 0,
                    message: format!("coefficient uses a parameter outside {}", self.domain),
                });
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &DomainSpec {
        &self.domain
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn n_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn claims_pbw(&self) -> bool {
        self.claims_pbw
    }

    pub fn claims_commutative(&self) -> bool {
        self.claims_commutative
    }

    pub fn max_rule_lhs_len(&self) -> usize {
        self.rules.iter().map(|r| r.lhs.len()).max().unwrap_or(0)
    }

    /// Parameter name used for rendering scalars.
    pub fn parameter(&self) -> &str {
        self.domain.display_parameter()
    }

    pub fn render_word(&self, w: &Word) -> String {
        w.render(&self.generators)
    }

    pub fn render_poly(&self, p: &NCPoly) -> String {
        p.render(&self.generators, self.parameter())
    }

    /// A canonical single-line rendering: domain, generators, rules, and
    /// flags, independent of comments and whitespace in the source.
    pub fn canonical_string(&self) -> String {
        let mut s = format!("domain:{};generators:{}", self.domain, self.generators.join(","));
        for rule in &self.rules {
            s.push_str(&format!(
                ";rule:{}->{}",
                self.render_word(&rule.lhs),
                self.render_poly(&rule.rhs)
            ));
        }
        if self.claims_pbw {
            s.push_str(";flag:pbw");
        }
        if self.claims_commutative {
            s.push_str(";flag:commutative");
        }
        s
    }

    pub fn fingerprint(&self) -> String {
        fingerprint64(self.canonical_string().as_bytes())
    }
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "domain: {}", self.domain)?;
        writeln!(f, "generators: {}", self.generators.join(" "))?;
        for rule in &self.rules {
            writeln!(
                f,
                "rule: {} -> {}",
                self.render_word(&rule.lhs),
                self.render_poly(&rule.rhs)
            )?;
        }
        let mut flags = Vec::new();
        if self.claims_pbw {
            flags.push("pbw");
        }
        if self.claims_commutative {
            flags.push("commutative");
        }
        if !flags.is_empty() {
            writeln!(f, "flags: {}", flags.join(" "))?;
        }
        Ok(())
    }
}
