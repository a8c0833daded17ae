//! Parser for the presentation file format and for polynomial expressions
//! appearing on the command line (frame elements, candidates, monomials).
//!
//! The file format is line oriented:
//!
//! ```text
//! # comment
//! domain: Z            (or Z[q])
//! generators: x y
//! rule: y x -> x y + 1
//! flags: pbw commutative
//! ```
//!
//! Words are written with whitespace between generators; `g^3` is sugar
//! for a repeated factor. Coefficient literals are signed integers and
//! powers of the domain parameter. A juxtaposed name such as `xy` is
//! accepted where unambiguous and resolves greedily to known generators.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{NCPoly, ParseError, Presentation, RewriteRule, Word};
use crate::coeff::{DomainSpec, Scalar};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Caret,
    Arrow,
}

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_continue(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

fn tokenize(line: usize, text: &str, col_offset: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = col_offset + i + 1;
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '+' {
            toks.push((Tok::Plus, col));
            i += 1;
        } else if c == '-' {
            if chars.get(i + 1) == Some(&'>') {
                toks.push((Tok::Arrow, col));
                i += 2;
            } else {
                toks.push((Tok::Minus, col));
                i += 1;
            }
        } else if c == '^' {
            toks.push((Tok::Caret, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            toks.push((Tok::Int(digits.parse().expect("digits")), col));
        } else if is_ident_start(c) {
            let start = i;
            while i < chars.len() && is_ident_continue(chars[i]) {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else {
            return Err(ParseError::Syntax {
                line,
                col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(toks)
}

/// One multiplicative segment of a resolved identifier.
#[derive(Debug, Clone, Copy)]
enum Seg {
    Gen(usize),
    Param,
}

struct ExprCtx<'a> {
    gens: &'a [String],
    param: Option<&'a str>,
}

impl ExprCtx<'_> {
    fn resolve(&self, name: &str) -> Option<Vec<Seg>> {
        if let Some(i) = self.gens.iter().position(|g| g == name) {
            return Some(vec![Seg::Gen(i)]);
        }
        if self.param == Some(name) {
            return Some(vec![Seg::Param]);
        }
        self.split(name)
    }

    /// Greedy factorization of a juxtaposed name into known generator and
    /// parameter names, longest candidate first, with backtracking.
    fn split(&self, s: &str) -> Option<Vec<Seg>> {
        if s.is_empty() {
            return Some(Vec::new());
        }
        let mut candidates: Vec<(&str, Seg)> = self
            .gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.as_str(), Seg::Gen(i)))
            .collect();
        if let Some(p) = self.param {
            candidates.push((p, Seg::Param));
        }
        candidates.sort_by_key(|c| std::cmp::Reverse(c.0.len()));
        self.split_with(s, &candidates)
    }

    fn split_with(&self, s: &str, candidates: &[(&str, Seg)]) -> Option<Vec<Seg>> {
        if s.is_empty() {
            return Some(Vec::new());
        }
        for (name, seg) in candidates {
            if let Some(rest) = s.strip_prefix(name) {
                if let Some(mut tail) = self.split_with(rest, candidates) {
                    tail.insert(0, *seg);
                    return Some(tail);
                }
            }
        }
        None
    }
}

struct PolyParser<'a> {
    toks: &'a [(Tok, usize)],
    pos: usize,
    line: usize,
    ctx: &'a ExprCtx<'a>,
}

impl<'a> PolyParser<'a> {
    fn peek(&self) -> Option<&'a (Tok, usize)> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a (Tok, usize)> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn end_col(&self) -> usize {
        self.toks.last().map(|(_, c)| c + 1).unwrap_or(1)
    }

    fn syntax(&self, col: usize, message: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col,
            message: message.into(),
        }
    }

    fn parse_poly(&mut self) -> Result<NCPoly, ParseError> {
        let mut out = NCPoly::zero();
        let mut negative = false;
        if let Some((Tok::Minus, _)) = self.peek() {
            self.bump();
            negative = true;
        }
        loop {
            let (coeff, word) = self.parse_term()?;
            out.add_term(word, if negative { -&coeff } else { coeff });
            match self.peek() {
                None => break,
                Some((Tok::Plus, _)) => {
                    self.bump();
                    negative = false;
                }
                Some((Tok::Minus, _)) => {
                    self.bump();
                    negative = true;
                }
                Some((tok, col)) => {
                    return Err(self.syntax(*col, format!("unexpected token {tok:?} in polynomial")))
                }
            }
        }
        Ok(out)
    }

    /// A term is a nonempty product of factors: integers, parameter
    /// powers, and generator words.
    fn parse_term(&mut self) -> Result<(Scalar, Word), ParseError> {
        let mut coeff = Scalar::one();
        let mut word = Word::one();
        let mut factors = 0usize;
        while let Some((Tok::Int(_) | Tok::Ident(_), _)) = self.peek() {
            let (c, w) = self.parse_factor()?;
            coeff = &coeff * &c;
            word = word.concat(&w);
            factors += 1;
        }
        if factors == 0 {
            let col = self.peek().map(|(_, c)| *c).unwrap_or_else(|| self.end_col());
            return Err(self.syntax(col, "expected a term"));
        }
        Ok((coeff, word))
    }

    fn parse_factor(&mut self) -> Result<(Scalar, Word), ParseError> {
        let (tok, col) = self.bump().expect("caller checked");
        match tok {
            Tok::Int(n) => {
                if let Some((Tok::Caret, caret_col)) = self.peek() {
                    return Err(self.syntax(*caret_col, "exponent sugar applies to names, not integers"));
                }
                Ok((Scalar::integer(n.clone()), Word::one()))
            }
            Tok::Ident(name) => {
                let exponent = self.parse_exponent()?;
                let Some(segs) = self.ctx.resolve(name) else {
                    // An exponent on an unresolvable name in an integer
                    // domain reads as a parameter coefficient.
                    if self.ctx.param.is_none() && exponent.is_some() {
                        return Err(ParseError::DomainMismatch {
                            line: self.line,
                            col: *col,
                            message: format!(
                                "coefficient `{name}` uses a parameter but the domain is Z"
                            ),
                        });
                    }
                    return Err(ParseError::UnknownGenerator {
                        line: self.line,
                        col: *col,
                        name: name.clone(),
                    });
                };
                let mut coeff = Scalar::one();
                let mut word = Word::one();
                for seg in &segs {
                    match seg {
                        Seg::Gen(i) => word = word.concat(&Word::single(*i)),
                        Seg::Param => coeff = &coeff * &Scalar::parameter(),
                    }
                }
                if let Some(k) = exponent {
                    coeff = coeff.pow(k);
                    word = word.pow(k);
                }
                Ok((coeff, word))
            }
            _ => Err(self.syntax(*col, "expected an integer, parameter, or generator")),
        }
    }

    fn parse_exponent(&mut self) -> Result<Option<usize>, ParseError> {
        if let Some((Tok::Caret, _)) = self.peek() {
            self.bump();
            match self.bump() {
                Some((Tok::Int(n), col)) => {
                    let k = n.to_usize().ok_or_else(|| self.syntax(*col, "exponent too large"))?;
                    Ok(Some(k))
                }
                other => {
                    let col = other.map(|(_, c)| *c).unwrap_or_else(|| self.end_col());
                    Err(self.syntax(col, "expected an integer exponent after `^`"))
                }
            }
        } else {
            Ok(None)
        }
    }
}

fn parse_domain(line: usize, col: usize, value: &str) -> Result<DomainSpec, ParseError> {
    let value = value.trim();
    if value == "Z" {
        return Ok(DomainSpec::Integers);
    }
    if let Some(inner) = value.strip_prefix("Z[").and_then(|v| v.strip_suffix(']')) {
        let name = inner.trim();
        if !name.is_empty()
            && name.chars().next().is_some_and(is_ident_start)
            && name.chars().all(is_ident_continue)
        {
            return Ok(DomainSpec::IntegersWithParameter(name.to_string()));
        }
    }
    Err(ParseError::Syntax {
        line,
        col,
        message: format!("expected `Z` or `Z[name]`, found `{value}`"),
    })
}

impl Presentation {
    /// Parse a presentation from its file format.
    pub fn parse(text: &str) -> Result<Presentation, ParseError> {
        let mut domain: Option<DomainSpec> = None;
        let mut generators: Option<Vec<String>> = None;
        let mut rules: Vec<RewriteRule> = Vec::new();
        let mut claims_pbw = false;
        let mut claims_commutative = false;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stripped = raw.split('#').next().unwrap_or("");
            if stripped.trim().is_empty() {
                continue;
            }
            let Some(colon) = stripped.find(':') else {
                return Err(ParseError::Syntax {
                    line,
                    col: 1,
                    message: "expected a `key: value` line".into(),
                });
            };
            let key = stripped[..colon].trim();
            let value = &stripped[colon + 1..];
            let value_col = colon + 1; // char offset of the value text
            match key {
                "domain" => {
                    if domain.is_some() {
                        return Err(ParseError::Syntax {
                            line,
                            col: 1,
                            message: "duplicate `domain:` line".into(),
                        });
                    }
                    domain = Some(parse_domain(line, value_col + 1, value)?);
                }
                "generators" => {
                    if generators.is_some() {
                        return Err(ParseError::Syntax {
                            line,
                            col: 1,
                            message: "duplicate `generators:` line".into(),
                        });
                    }
                    let d = domain.as_ref().ok_or_else(|| ParseError::Syntax {
                        line,
                        col: 1,
                        message: "`generators:` must come after `domain:`".into(),
                    })?;
                    let mut names = Vec::new();
                    for name in value.split_whitespace() {
                        if !name.chars().next().is_some_and(is_ident_start)
                            || !name.chars().all(is_ident_continue)
                        {
                            return Err(ParseError::Syntax {
                                line,
                                col: value_col + 1,
                                message: format!("invalid generator name `{name}`"),
                            });
                        }
                        if Some(name) == d.parameter_name() {
                            return Err(ParseError::DomainMismatch {
                                line,
                                col: value_col + 1,
                                message: format!(
                                    "generator `{name}` clashes with the domain parameter"
                                ),
                            });
                        }
                        if names.iter().any(|n| n == name) {
                            return Err(ParseError::Syntax {
                                line,
                                col: value_col + 1,
                                message: format!("duplicate generator `{name}`"),
                            });
                        }
                        names.push(name.to_string());
                    }
                    generators = Some(names);
                }
                "rule" => {
                    let d = domain.clone().ok_or_else(|| ParseError::Syntax {
                        line,
                        col: 1,
                        message: "`rule:` must come after `domain:`".into(),
                    })?;
                    let gens = generators.clone().ok_or_else(|| ParseError::Syntax {
                        line,
                        col: 1,
                        message: "`rule:` must come after `generators:`".into(),
                    })?;
                    let rule = parse_rule(line, value, value_col, &d, &gens)?;
                    let probe = Presentation {
                        domain: d,
                        generators: gens,
                        rules: Vec::new(),
                        claims_pbw: false,
                        claims_commutative: false,
                    };
                    probe.validate_rule(&rule, line)?;
                    rules.push(rule);
                }
                "flags" => {
                    for flag in value.split_whitespace() {
                        match flag {
                            "pbw" => claims_pbw = true,
                            "commutative" => claims_commutative = true,
                            other => {
                                return Err(ParseError::Syntax {
                                    line,
                                    col: value_col + 1,
                                    message: format!("unknown flag `{other}`"),
                                });
                            }
                        }
                    }
                }
                other => {
                    return Err(ParseError::Syntax {
                        line,
                        col: 1,
                        message: format!("unknown key `{other}`"),
                    });
                }
            }
        }

        let domain = domain.ok_or(ParseError::Syntax {
            line: 1,
            col: 1,
            message: "missing `domain:` line".into(),
        })?;
        let generators = generators.ok_or(ParseError::Syntax {
            line: 1,
            col: 1,
            message: "missing `generators:` line".into(),
        })?;
        Presentation::new(domain, generators, rules, claims_pbw, claims_commutative)
    }

    /// Parse a polynomial expression such as a frame element or tdeg
    /// candidate against this presentation's generators and domain.
    pub fn parse_poly(&self, text: &str) -> Result<NCPoly, ParseError> {
        let ctx = ExprCtx {
            gens: &self.generators,
            param: self.domain.parameter_name(),
        };
        let toks = tokenize(1, text, 0)?;
        if toks.is_empty() {
            return Err(ParseError::Syntax {
                line: 1,
                col: 1,
                message: "empty polynomial expression".into(),
            });
        }
        let mut parser = PolyParser {
            toks: &toks,
            pos: 0,
            line: 1,
            ctx: &ctx,
        };
        parser.parse_poly()
    }

    /// Parse a word (a monomial with coefficient one).
    pub fn parse_word(&self, text: &str) -> Result<Word, ParseError> {
        let poly = self.parse_poly(text)?;
        if let Some((w, c)) = poly.as_monomial() {
            if c.is_one() {
                return Ok(w.clone());
            }
        }
        Err(ParseError::Syntax {
            line: 1,
            col: 1,
            message: format!("expected a plain word, found `{}`", self.render_poly(&poly)),
        })
    }
}

fn parse_rule(
    line: usize,
    value: &str,
    value_col: usize,
    domain: &DomainSpec,
    gens: &[String],
) -> Result<RewriteRule, ParseError> {
    let toks = tokenize(line, value, value_col)?;
    let arrow = toks
        .iter()
        .position(|(t, _)| matches!(t, Tok::Arrow))
        .ok_or(ParseError::Syntax {
            line,
            col: value_col + 1,
            message: "rule is missing `->`".into(),
        })?;
    let ctx = ExprCtx {
        gens,
        param: domain.parameter_name(),
    };

    // Left-hand side: a plain word, no coefficients.
    let mut lhs_parser = PolyParser {
        toks: &toks[..arrow],
        pos: 0,
        line,
        ctx: &ctx,
    };
    if toks[..arrow].is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: value_col + 1,
            message: "rule has an empty left-hand side".into(),
        });
    }
    let (coeff, lhs) = lhs_parser.parse_term()?;
    if lhs_parser.pos != arrow {
        let col = toks[lhs_parser.pos].1;
        return Err(ParseError::Syntax {
            line,
            col,
            message: "left-hand side must be a single word".into(),
        });
    }
    if !coeff.is_one() {
        return Err(ParseError::Syntax {
            line,
            col: toks[0].1,
            message: "left-hand side must be a word without a coefficient".into(),
        });
    }

    let rhs_toks = &toks[arrow + 1..];
    let rhs = if rhs_toks.is_empty() {
        return Err(ParseError::Syntax {
            line,
            col: toks[arrow].1,
            message: "rule has an empty right-hand side".into(),
        });
    } else {
        let mut rhs_parser = PolyParser {
            toks: rhs_toks,
            pos: 0,
            line,
            ctx: &ctx,
        };
        rhs_parser.parse_poly()?
    };
    Ok(RewriteRule { lhs, rhs })
}
