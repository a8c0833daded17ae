//! S-expression reader for construction trees, e.g.
//! `(skewpbw (base "Z[x]" 1 1 :commutative) :t 1)` or
//! `(tensor (base 2 2) (base 3 3) :fg)`.
//!
//! Dimension endpoints accept `inf`, integers, ratios like `7/3`, and
//! decimals like `1.5`; everything is read exactly, never through floats.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::{CalculusError, ConstructionExpr, DimBound, DimValue};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    LParen,
    RParen,
    Str(String),
    Keyword(String),
    Atom(String),
}

fn err(msg: impl Into<String>) -> CalculusError {
    CalculusError::MalformedExpression(msg.into())
}

fn lex(text: &str) -> Result<Vec<Tok>, CalculusError> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            toks.push(Tok::LParen);
            i += 1;
        } else if c == ')' {
            toks.push(Tok::RParen);
            i += 1;
        } else if c == '"' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && chars[j] != '"' {
                j += 1;
            }
            if j == chars.len() {
                return Err(err("unterminated string literal"));
            }
            toks.push(Tok::Str(chars[start..j].iter().collect()));
            i = j + 1;
        } else if c == ':' {
            let start = i + 1;
            let mut j = start;
            while j < chars.len() && !chars[j].is_whitespace() && chars[j] != '(' && chars[j] != ')'
            {
                j += 1;
            }
            toks.push(Tok::Keyword(chars[start..j].iter().collect()));
            i = j;
        } else {
            let start = i;
            let mut j = i;
            while j < chars.len() && !chars[j].is_whitespace() && chars[j] != '(' && chars[j] != ')'
            {
                j += 1;
            }
            toks.push(Tok::Atom(chars[start..j].iter().collect()));
            i = j;
        }
    }
    Ok(toks)
}

struct Cursor<'a> {
    toks: &'a [Tok],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<&'a Tok> {
        self.toks.get(self.pos)
    }

    fn bump(&mut self) -> Option<&'a Tok> {
        let t = self.toks.get(self.pos);
        self.pos += 1;
        t
    }

    fn expect_close(&mut self) -> Result<(), CalculusError> {
        match self.bump() {
            Some(Tok::RParen) => Ok(()),
            other => Err(err(format!("expected `)`, found {other:?}"))),
        }
    }

    fn child(&mut self) -> Result<Box<ConstructionExpr>, CalculusError> {
        Ok(Box::new(self.expr()?))
    }

    fn count_atom(&mut self, what: &str) -> Result<usize, CalculusError> {
        match self.bump() {
            Some(Tok::Atom(a)) => a
                .parse::<usize>()
                .map_err(|_| err(format!("{what} expects a nonnegative integer, found `{a}`"))),
            other => Err(err(format!("{what} expects an integer, found {other:?}"))),
        }
    }

    fn keyword_count(&mut self, name: &str) -> Result<usize, CalculusError> {
        match self.bump() {
            Some(Tok::Keyword(k)) if k == name => self.count_atom(&format!(":{name}")),
            other => Err(err(format!("expected `:{name} N`, found {other:?}"))),
        }
    }

    fn dim_value(&mut self) -> Result<DimValue, CalculusError> {
        match self.bump() {
            Some(Tok::Atom(a)) => parse_dim_value(a),
            other => Err(err(format!("expected a dimension value, found {other:?}"))),
        }
    }

    fn expr(&mut self) -> Result<ConstructionExpr, CalculusError> {
        match self.bump() {
            Some(Tok::LParen) => {}
            other => return Err(err(format!("expected `(`, found {other:?}"))),
        }
        let head = match self.bump() {
            Some(Tok::Atom(a)) => a.as_str(),
            other => return Err(err(format!("expected a node name, found {other:?}"))),
        };
        let node = match head {
            "base" => {
                let name = match self.peek() {
                    Some(Tok::Str(s)) => {
                        self.bump();
                        s.clone()
                    }
                    _ => String::new(),
                };
                let lo = self.dim_value()?;
                let hi = self.dim_value()?;
                let mut commutative = false;
                let mut fin_gen = false;
                while let Some(Tok::Keyword(k)) = self.peek() {
                    self.bump();
                    match k.as_str() {
                        "commutative" => commutative = true,
                        "fingen" => fin_gen = true,
                        other => return Err(err(format!("base does not take `:{other}`"))),
                    }
                }
                ConstructionExpr::Base {
                    name,
                    bound: DimBound::new(lo, hi)?,
                    commutative,
                    fin_gen,
                }
            }
            "polyext" => {
                let child = self.child()?;
                let m = self.keyword_count("m")?;
                ConstructionExpr::PolyExt { child, m }
            }
            "freealg" => ConstructionExpr::FreeAlgebra {
                m: self.count_atom("freealg")?,
            },
            "matring" => {
                let child = self.child()?;
                let n = self.keyword_count("n")?;
                ConstructionExpr::MatrixRing { child, n }
            }
            "quotient" => ConstructionExpr::Quotient {
                child: self.child()?,
            },
            "subalg" => {
                let child = self.child()?;
                let mut central_module_finite = false;
                if let Some(Tok::Keyword(k)) = self.peek() {
                    if k == "central-module-finite" {
                        self.bump();
                        central_module_finite = true;
                    } else {
                        return Err(err(format!("subalg does not take `:{k}`")));
                    }
                }
                ConstructionExpr::Subalgebra {
                    child,
                    central_module_finite,
                }
            }
            "product" => ConstructionExpr::DirectProduct {
                left: self.child()?,
                right: self.child()?,
            },
            "tensor" => {
                let left = self.child()?;
                let right = self.child()?;
                let mut fg_witness = false;
                if let Some(Tok::Keyword(k)) = self.peek() {
                    if k == "fg" {
                        self.bump();
                        fg_witness = true;
                    } else {
                        return Err(err(format!("tensor does not take `:{k}`")));
                    }
                }
                ConstructionExpr::Tensor {
                    left,
                    right,
                    fg_witness,
                }
            }
            "localize" => ConstructionExpr::Localization {
                child: self.child()?,
            },
            "groupring" => {
                let child = self.child()?;
                let group_order = self.keyword_count("order")?;
                ConstructionExpr::GroupRing { child, group_order }
            }
            "graded" => ConstructionExpr::AssocGraded {
                child: self.child()?,
            },
            "ore" => ConstructionExpr::OreExt {
                child: self.child()?,
            },
            "skewpbw" => {
                let child = self.child()?;
                let t = self.keyword_count("t")?;
                ConstructionExpr::SkewPBW { child, t }
            }
            "regmod" => ConstructionExpr::RegularModule {
                child: self.child()?,
            },
            "submod" => ConstructionExpr::SubOrQuotientModule {
                child: self.child()?,
            },
            "annmod" => ConstructionExpr::AnnihilatedModule {
                child: self.child()?,
            },
            "modsum" => {
                let mut children = Vec::new();
                while matches!(self.peek(), Some(Tok::LParen)) {
                    children.push(self.expr()?);
                }
                ConstructionExpr::ModuleSum { children }
            }
            "tdeg" => ConstructionExpr::Tdeg {
                child: self.child()?,
            },
            other => return Err(err(format!("unknown node `{other}`"))),
        };
        self.expect_close()?;
        Ok(node)
    }
}

fn parse_dim_value(text: &str) -> Result<DimValue, CalculusError> {
    if text == "inf" {
        return Ok(DimValue::Infinity);
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p
            .parse()
            .map_err(|_| err(format!("bad ratio numerator in `{text}`")))?;
        let q: BigInt = q
            .parse()
            .map_err(|_| err(format!("bad ratio denominator in `{text}`")))?;
        if q.is_zero() {
            return Err(err(format!("zero denominator in `{text}`")));
        }
        return DimValue::finite(BigRational::new(p, q));
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches('-');
        if !int_digits.chars().all(|c| c.is_ascii_digit())
            || frac_part.is_empty()
            || !frac_part.chars().all(|c| c.is_ascii_digit())
        {
            return Err(err(format!("bad decimal `{text}`")));
        }
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().expect("digits")
        };
        let frac_val: BigInt = frac_part.parse().expect("digits");
        let mut numer = int_val * &scale + frac_val;
        if negative {
            numer = -numer;
        }
        return DimValue::finite(BigRational::new(numer, scale));
    }
    let n: BigInt = text
        .parse()
        .map_err(|_| err(format!("bad dimension value `{text}`")))?;
    DimValue::finite(BigRational::from_integer(n))
}

/// Parse and validate a construction expression.
pub fn parse_construction(text: &str) -> Result<ConstructionExpr, CalculusError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(err("empty expression"));
    }
    let mut cur = Cursor {
        toks: &toks,
        pos: 0,
    };
    let expr = cur.expr()?;
    if cur.pos != toks.len() {
        return Err(err("trailing input after the expression"));
    }
    expr.validate(true)?;
    Ok(expr)
}
