//! Symbolic interval calculus for dimensions of constructed algebras and
//! modules.
//!
//! A construction tree records how an algebra was built (polynomial and
//! skew extensions, quotients, tensor products, group rings, ...) from
//! base algebras with known or partially known dimension. Evaluation
//! walks the tree bottom-up, propagating closed intervals with extended
//! arithmetic and recording one trace entry per node. Side hypotheses
//! (finite generation, centrality, bijectivity) are caller-asserted
//! flags: a missing flag never errors, it just yields the weaker
//! interval, and the trace says which rule was blocked.

mod parse;

pub use parse::parse_construction;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::json;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum CalculusError {
    #[error("malformed expression: {0}")]
    MalformedExpression(String),
    #[error("bound has empty intersection with the admissible set {{0}} u {{1}} u [2, inf]")]
    EmptyBound,
}

/// A dimension value: a nonnegative rational, or infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimValue {
    Finite(BigRational),
    Infinity,
}

impl DimValue {
    pub fn zero() -> Self {
        DimValue::Finite(BigRational::zero())
    }

    pub fn from_usize(n: usize) -> Self {
        DimValue::Finite(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn finite(r: BigRational) -> Result<Self, CalculusError> {
        if r.is_negative() {
            return Err(CalculusError::MalformedExpression(format!(
                "dimension value {r} is negative"
            )));
        }
        Ok(DimValue::Finite(r))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, DimValue::Infinity)
    }

    pub fn as_finite(&self) -> Option<&BigRational> {
        match self {
            DimValue::Finite(r) => Some(r),
            DimValue::Infinity => None,
        }
    }

    pub fn add(&self, other: &DimValue) -> DimValue {
        match (self, other) {
            (DimValue::Finite(a), DimValue::Finite(b)) => DimValue::Finite(a + b),
            _ => DimValue::Infinity,
        }
    }

    pub fn add_usize(&self, n: usize) -> DimValue {
        self.add(&DimValue::from_usize(n))
    }
}

impl PartialOrd for DimValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DimValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DimValue::Finite(a), DimValue::Finite(b)) => a.cmp(b),
            (DimValue::Finite(_), DimValue::Infinity) => Ordering::Less,
            (DimValue::Infinity, DimValue::Finite(_)) => Ordering::Greater,
            (DimValue::Infinity, DimValue::Infinity) => Ordering::Equal,
        }
    }
}

impl fmt::Display for DimValue {
    /// Exact text: integers plainly, terminating decimals as decimals,
    /// everything else as `p/q`, infinity as `inf`. Never floating point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Infinity => write!(f, "inf"),
            DimValue::Finite(r) => write!(f, "{}", render_rational(r)),
        }
    }
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        return r.numer().to_string();
    }
    let mut d = r.denom().clone();
    let (mut twos, mut fives) = (0u32, 0u32);
    while (&d % BigInt::from(2)).is_zero() {
        d /= 2;
        twos += 1;
    }
    while (&d % BigInt::from(5)).is_zero() {
        d /= 5;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let k = twos.max(fives);
    let scale = BigInt::from(10).pow(k) / r.denom();
    let scaled = r.numer() * scale;
    let sign = if scaled.is_negative() { "-" } else { "" };
    let digits = scaled.abs().to_string();
    let digits = format!("{:0>width$}", digits, width = k as usize + 1);
    let split = digits.len() - k as usize;
    let (int_part, frac_part) = digits.split_at(split);
    let frac_part = frac_part.trim_end_matches('0');
    format!("{sign}{int_part}.{frac_part}")
}

/// A closed dimension interval with `lo <= hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimBound {
    lo: DimValue,
    hi: DimValue,
}

impl DimBound {
    pub fn new(lo: DimValue, hi: DimValue) -> Result<Self, CalculusError> {
        if lo > hi {
            return Err(CalculusError::MalformedExpression(format!(
                "bound [{lo}, {hi}] has lo > hi"
            )));
        }
        Ok(DimBound { lo, hi })
    }

    pub fn exact(v: DimValue) -> Self {
        DimBound {
            lo: v.clone(),
            hi: v,
        }
    }

    pub fn lo(&self) -> &DimValue {
        &self.lo
    }

    pub fn hi(&self) -> &DimValue {
        &self.hi
    }

    pub fn contains(&self, v: &DimValue) -> bool {
        &self.lo <= v && v <= &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    fn shift(&self, n: usize) -> DimBound {
        DimBound {
            lo: self.lo.add_usize(n),
            hi: self.hi.add_usize(n),
        }
    }

    fn join_max(&self, other: &DimBound) -> DimBound {
        DimBound {
            lo: self.lo.clone().max(other.lo.clone()),
            hi: self.hi.clone().max(other.hi.clone()),
        }
    }
}

impl fmt::Display for DimBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A construction tree. Algebra nodes build on algebra children, module
/// nodes on the documented child sort, and `Tdeg` can only be the root.
#[derive(Debug, Clone)]
pub enum ConstructionExpr {
    Base {
        name: String,
        bound: DimBound,
        commutative: bool,
        fin_gen: bool,
    },
    PolyExt {
        child: Box<ConstructionExpr>,
        m: usize,
    },
    FreeAlgebra {
        m: usize,
    },
    MatrixRing {
        child: Box<ConstructionExpr>,
        n: usize,
    },
    Quotient {
        child: Box<ConstructionExpr>,
    },
    Subalgebra {
        child: Box<ConstructionExpr>,
        central_module_finite: bool,
    },
    DirectProduct {
        left: Box<ConstructionExpr>,
        right: Box<ConstructionExpr>,
    },
    Tensor {
        left: Box<ConstructionExpr>,
        right: Box<ConstructionExpr>,
        fg_witness: bool,
    },
    Localization {
        child: Box<ConstructionExpr>,
    },
    GroupRing {
        child: Box<ConstructionExpr>,
        group_order: usize,
    },
    AssocGraded {
        child: Box<ConstructionExpr>,
    },
    OreExt {
        child: Box<ConstructionExpr>,
    },
    SkewPBW {
        child: Box<ConstructionExpr>,
        t: usize,
    },
    RegularModule {
        child: Box<ConstructionExpr>,
    },
    SubOrQuotientModule {
        child: Box<ConstructionExpr>,
    },
    AnnihilatedModule {
        child: Box<ConstructionExpr>,
    },
    ModuleSum {
        children: Vec<ConstructionExpr>,
    },
    Tdeg {
        child: Box<ConstructionExpr>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Sort {
    Algebra,
    Module,
}

impl ConstructionExpr {
    fn label(&self) -> String {
        match self {
            ConstructionExpr::Base { name, .. } if name.is_empty() => "base".into(),
            ConstructionExpr::Base { name, .. } => format!("base \"{name}\""),
            ConstructionExpr::PolyExt { m, .. } => format!("polyext(m={m})"),
            ConstructionExpr::FreeAlgebra { m } => format!("freealg({m})"),
            ConstructionExpr::MatrixRing { n, .. } => format!("matring(n={n})"),
            ConstructionExpr::Quotient { .. } => "quotient".into(),
            ConstructionExpr::Subalgebra { .. } => "subalg".into(),
            ConstructionExpr::DirectProduct { .. } => "product".into(),
            ConstructionExpr::Tensor { .. } => "tensor".into(),
            ConstructionExpr::Localization { .. } => "localize".into(),
            ConstructionExpr::GroupRing { group_order, .. } => {
                format!("groupring(order={group_order})")
            }
            ConstructionExpr::AssocGraded { .. } => "graded".into(),
            ConstructionExpr::OreExt { .. } => "ore".into(),
            ConstructionExpr::SkewPBW { t, .. } => format!("skewpbw(t={t})"),
            ConstructionExpr::RegularModule { .. } => "regmod".into(),
            ConstructionExpr::SubOrQuotientModule { .. } => "submod".into(),
            ConstructionExpr::AnnihilatedModule { .. } => "annmod".into(),
            ConstructionExpr::ModuleSum { children } => format!("modsum({})", children.len()),
            ConstructionExpr::Tdeg { .. } => "tdeg".into(),
        }
    }

    /// Conservative commutativity: true only when the construction forces
    /// it. Skew and Ore extensions answer false even when their data
    /// happens to commute, because the node does not carry that data.
    fn is_commutative(&self) -> bool {
        match self {
            ConstructionExpr::Base { commutative, .. } => *commutative,
            ConstructionExpr::PolyExt { child, .. } => child.is_commutative(),
            ConstructionExpr::FreeAlgebra { m } => *m <= 1,
            ConstructionExpr::MatrixRing { child, n } => *n <= 1 && child.is_commutative(),
            ConstructionExpr::Quotient { child } => child.is_commutative(),
            ConstructionExpr::Subalgebra { child, .. } => child.is_commutative(),
            ConstructionExpr::DirectProduct { left, right } => {
                left.is_commutative() && right.is_commutative()
            }
            ConstructionExpr::Tensor { left, right, .. } => {
                left.is_commutative() && right.is_commutative()
            }
            ConstructionExpr::Localization { child } => child.is_commutative(),
            // Groups of order below six are abelian, so the group ring
            // stays commutative; past that we cannot know from the order.
            ConstructionExpr::GroupRing { child, group_order } => {
                child.is_commutative() && *group_order < 6
            }
            ConstructionExpr::AssocGraded { child } => child.is_commutative(),
            ConstructionExpr::OreExt { .. } => false,
            ConstructionExpr::SkewPBW { .. } => false,
            ConstructionExpr::RegularModule { .. }
            | ConstructionExpr::SubOrQuotientModule { .. }
            | ConstructionExpr::AnnihilatedModule { .. }
            | ConstructionExpr::ModuleSum { .. }
            | ConstructionExpr::Tdeg { .. } => false,
        }
    }

    fn sort(&self) -> Sort {
        match self {
            ConstructionExpr::RegularModule { .. }
            | ConstructionExpr::SubOrQuotientModule { .. }
            | ConstructionExpr::AnnihilatedModule { .. }
            | ConstructionExpr::ModuleSum { .. } => Sort::Module,
            _ => Sort::Algebra,
        }
    }

    fn validate(&self, is_root: bool) -> Result<(), CalculusError> {
        let algebra_child = |c: &ConstructionExpr, who: &str| {
            c.validate(false)?;
            if c.sort() != Sort::Algebra {
                return Err(CalculusError::MalformedExpression(format!(
                    "{who} needs an algebra child, found a module node"
                )));
            }
            Ok(())
        };
        let module_child = |c: &ConstructionExpr, who: &str| {
            c.validate(false)?;
            if c.sort() != Sort::Module {
                return Err(CalculusError::MalformedExpression(format!(
                    "{who} needs a module child, found an algebra node"
                )));
            }
            Ok(())
        };
        match self {
            ConstructionExpr::Base { .. } | ConstructionExpr::FreeAlgebra { .. } => Ok(()),
            ConstructionExpr::PolyExt { child, .. }
            | ConstructionExpr::MatrixRing { child, .. }
            | ConstructionExpr::Quotient { child }
            | ConstructionExpr::Subalgebra { child, .. }
            | ConstructionExpr::Localization { child }
            | ConstructionExpr::GroupRing { child, .. }
            | ConstructionExpr::AssocGraded { child }
            | ConstructionExpr::OreExt { child }
            | ConstructionExpr::SkewPBW { child, .. } => algebra_child(child, &self.label()),
            ConstructionExpr::DirectProduct { left, right } => {
                algebra_child(left, "product")?;
                algebra_child(right, "product")
            }
            ConstructionExpr::Tensor { left, right, .. } => {
                algebra_child(left, "tensor")?;
                algebra_child(right, "tensor")
            }
            ConstructionExpr::RegularModule { child } => algebra_child(child, "regmod"),
            ConstructionExpr::SubOrQuotientModule { child } => module_child(child, "submod"),
            ConstructionExpr::AnnihilatedModule { child } => module_child(child, "annmod"),
            ConstructionExpr::ModuleSum { children } => {
                if children.is_empty() {
                    return Err(CalculusError::MalformedExpression(
                        "modsum needs at least one summand".into(),
                    ));
                }
                for c in children {
                    module_child(c, "modsum")?;
                }
                Ok(())
            }
            ConstructionExpr::Tdeg { child } => {
                if !is_root {
                    return Err(CalculusError::MalformedExpression(
                        "tdeg can only appear at the root".into(),
                    ));
                }
                algebra_child(child, "tdeg")
            }
        }
    }
}

/// One step of the derivation: which node, which rule fired (or was
/// blocked), the children's bounds, and the node's output bound.
#[derive(Debug, Clone)]
pub struct TraceEntry {
    pub node: String,
    pub rule: String,
    pub cite: String,
    pub input_bounds: Vec<DimBound>,
    pub output: DimBound,
}

/// Evaluate a construction tree to the tightest derivable interval, with
/// one trace entry per node in bottom-up order.
pub fn eval_construction(
    expr: &ConstructionExpr,
) -> Result<(DimBound, Vec<TraceEntry>), CalculusError> {
    expr.validate(true)?;
    let mut trace = Vec::new();
    let bound = eval(expr, &mut trace);
    Ok((bound, trace))
}

fn eval(expr: &ConstructionExpr, trace: &mut Vec<TraceEntry>) -> DimBound {
    let (rule, cite, inputs, out): (&str, String, Vec<DimBound>, DimBound) = match expr {
        ConstructionExpr::Base { bound, .. } => (
            "base",
            "caller-supplied dimension bound".into(),
            vec![],
            bound.clone(),
        ),
        ConstructionExpr::PolyExt { child, m } => {
            let c = eval(child, trace);
            let out = c.shift(*m);
            (
                "poly-extension",
                format!(
                    "a polynomial extension in {m} central variable{} adds {m} to both endpoints",
                    if *m == 1 { "" } else { "s" }
                ),
                vec![c],
                out,
            )
        }
        ConstructionExpr::FreeAlgebra { m } => {
            let (out, cite) = match m {
                0 => (
                    DimBound::exact(DimValue::zero()),
                    "the free algebra on no generators is the base ring, which has finite rank".to_string(),
                ),
                1 => (
                    DimBound::exact(DimValue::from_usize(1)),
                    "the free algebra on one generator is a univariate polynomial ring".to_string(),
                ),
                _ => (
                    DimBound::exact(DimValue::Infinity),
                    format!("the free algebra on {m} generators grows exponentially"),
                ),
            };
            ("free-algebra", cite, vec![], out)
        }
        ConstructionExpr::MatrixRing { child, .. } => {
            let c = eval(child, trace);
            (
                "matrix-ring",
                "matrix rings over an algebra keep its dimension".into(),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::Quotient { child } => {
            let c = eval(child, trace);
            let out = DimBound {
                lo: DimValue::zero(),
                hi: c.hi.clone(),
            };
            (
                "quotient",
                "a quotient never exceeds the parent; no lower bound survives".into(),
                vec![c],
                out,
            )
        }
        ConstructionExpr::Subalgebra {
            child,
            central_module_finite,
        } => {
            let c = eval(child, trace);
            if *central_module_finite {
                (
                    "subalgebra-equality",
                    "a central subalgebra over which the algebra is module-finite has the same dimension".into(),
                    vec![c.clone()],
                    c,
                )
            } else {
                let out = DimBound {
                    lo: DimValue::zero(),
                    hi: c.hi.clone(),
                };
                (
                    "subalgebra",
                    "a subalgebra never exceeds the ambient algebra; equality blocked because central module-finiteness was not asserted".into(),
                    vec![c],
                    out,
                )
            }
        }
        ConstructionExpr::DirectProduct { left, right } => {
            let l = eval(left, trace);
            let r = eval(right, trace);
            let out = l.join_max(&r);
            (
                "direct-product",
                "a direct product grows like its larger factor".into(),
                vec![l, r],
                out,
            )
        }
        ConstructionExpr::Tensor {
            left,
            right,
            fg_witness,
        } => {
            let l = eval(left, trace);
            let r = eval(right, trace);
            if *fg_witness {
                let out = DimBound {
                    lo: l.lo.add(&r.lo),
                    hi: l.hi.add(&r.hi),
                };
                (
                    "tensor-additive",
                    "with the finitely generated witness the dimensions of a tensor product add".into(),
                    vec![l, r],
                    out,
                )
            } else {
                let out = DimBound {
                    lo: l.lo.clone().max(r.lo.clone()),
                    hi: l.hi.add(&r.hi),
                };
                (
                    "tensor",
                    "a tensor product is at least its larger factor and at most the sum; additivity blocked because no finitely generated witness was asserted".into(),
                    vec![l, r],
                    out,
                )
            }
        }
        ConstructionExpr::Localization { child } => {
            let c = eval(child, trace);
            (
                "localization",
                "localizing at a central regular multiplicative system keeps the dimension".into(),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::GroupRing { child, group_order } => {
            let c = eval(child, trace);
            (
                "group-ring",
                format!("the group ring over a finite group (order {group_order}) keeps the dimension"),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::AssocGraded { child } => {
            let c = eval(child, trace);
            (
                "associated-graded",
                "the associated graded ring of a locally finite filtration keeps the dimension".into(),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::OreExt { child } => {
            let c = eval(child, trace);
            let out = c.shift(1);
            (
                "ore-extension",
                "an Ore extension with frame-stable automorphism adds one".into(),
                vec![c],
                out,
            )
        }
        ConstructionExpr::SkewPBW { child, t } => {
            let c = eval(child, trace);
            let out = c.shift(*t);
            (
                "skew-pbw",
                format!(
                    "a bijective skew extension in {t} generator{} adds {t}",
                    if *t == 1 { "" } else { "s" }
                ),
                vec![c],
                out,
            )
        }
        ConstructionExpr::RegularModule { child } => {
            let c = eval(child, trace);
            (
                "regular-module",
                "the regular module grows exactly like the algebra".into(),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::SubOrQuotientModule { child } => {
            let c = eval(child, trace);
            let out = DimBound {
                lo: DimValue::zero(),
                hi: c.hi.clone(),
            };
            (
                "sub-or-quotient-module",
                "a submodule or quotient module never exceeds the parent module".into(),
                vec![c],
                out,
            )
        }
        ConstructionExpr::AnnihilatedModule { child } => {
            let c = eval(child, trace);
            (
                "annihilated-module",
                "a module killed by an ideal has the same dimension over the quotient algebra".into(),
                vec![c.clone()],
                c,
            )
        }
        ConstructionExpr::ModuleSum { children } => {
            let bounds: Vec<DimBound> = children.iter().map(|c| eval(c, trace)).collect();
            let mut out = bounds[0].clone();
            for b in &bounds[1..] {
                out = out.join_max(b);
            }
            (
                "module-sum",
                "a finite sum of modules grows like its largest summand".into(),
                bounds.clone(),
                out,
            )
        }
        ConstructionExpr::Tdeg { child } => {
            let c = eval(child, trace);
            if child.is_commutative() {
                (
                    "tdeg-commutative",
                    "for commutative algebras the torsion degree equals the dimension".into(),
                    vec![c.clone()],
                    c,
                )
            } else {
                let out = DimBound {
                    lo: DimValue::zero(),
                    hi: c.hi.clone(),
                };
                (
                    "tdeg",
                    "torsion degree never exceeds the dimension; equality blocked because commutativity is not established".into(),
                    vec![c],
                    out,
                )
            }
        }
    };
    trace.push(TraceEntry {
        node: expr.label(),
        rule: rule.to_string(),
        cite,
        input_bounds: inputs,
        output: out.clone(),
    });
    out
}

/// Intersect a bound with the admissible dimension set
/// {0} u {1} u [2, inf]: endpoints strictly inside a gap move to the
/// nearest admissible value on their own side.
pub fn bergman_normalize(b: &DimBound) -> Result<DimBound, CalculusError> {
    let one = BigRational::one();
    let two = BigRational::from_integer(BigInt::from(2));
    let snap_lo = |v: &DimValue| -> DimValue {
        if let DimValue::Finite(r) = v {
            if r > &BigRational::zero() && r < &one {
                return DimValue::Finite(one.clone());
            }
            if r > &one && r < &two {
                return DimValue::Finite(two.clone());
            }
        }
        v.clone()
    };
    let snap_hi = |v: &DimValue| -> DimValue {
        if let DimValue::Finite(r) = v {
            if r > &BigRational::zero() && r < &one {
                return DimValue::zero();
            }
            if r > &one && r < &two {
                return DimValue::Finite(one.clone());
            }
        }
        v.clone()
    };
    let lo = snap_lo(b.lo());
    let hi = snap_hi(b.hi());
    if lo > hi {
        return Err(CalculusError::EmptyBound);
    }
    Ok(DimBound { lo, hi })
}

/// JSON shape: {lo, hi, exact, trace: [{node, rule, cite}]}, all numbers
/// as exact strings.
pub fn eval_to_json(bound: &DimBound, trace: &[TraceEntry]) -> serde_json::Value {
    json!({
        "lo": bound.lo().to_string(),
        "hi": bound.hi().to_string(),
        "exact": bound.is_exact(),
        "trace": trace.iter().map(|t| json!({
            "node": t.node,
            "rule": t.rule,
            "cite": t.cite,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base(d: usize) -> ConstructionExpr {
        ConstructionExpr::Base {
            name: String::new(),
            bound: DimBound::exact(DimValue::from_usize(d)),
            commutative: false,
            fin_gen: false,
        }
    }

    fn commutative_base(d: usize) -> ConstructionExpr {
        ConstructionExpr::Base {
            name: String::new(),
            bound: DimBound::exact(DimValue::from_usize(d)),
            commutative: true,
            fin_gen: false,
        }
    }

    fn eval_bounds(e: &ConstructionExpr) -> (String, String) {
        let (b, _) = eval_construction(e).unwrap();
        (b.lo().to_string(), b.hi().to_string())
    }

    #[test]
    fn weyl_as_skew_extension_of_polynomials() {
        let e = ConstructionExpr::SkewPBW {
            child: Box::new(commutative_base(1)),
            t: 1,
        };
        assert_eq!(eval_bounds(&e), ("2".into(), "2".into()));
    }

    #[test]
    fn tensor_with_and_without_witness() {
        let with = ConstructionExpr::Tensor {
            left: Box::new(base(2)),
            right: Box::new(base(3)),
            fg_witness: true,
        };
        assert_eq!(eval_bounds(&with), ("5".into(), "5".into()));
        let without = ConstructionExpr::Tensor {
            left: Box::new(base(2)),
            right: Box::new(base(3)),
            fg_witness: false,
        };
        assert_eq!(eval_bounds(&without), ("3".into(), "5".into()));
        let (_, trace) = eval_construction(&without).unwrap();
        assert!(trace.last().unwrap().cite.contains("blocked"));
    }

    #[test]
    fn direct_product_takes_the_max() {
        let e = ConstructionExpr::DirectProduct {
            left: Box::new(base(2)),
            right: Box::new(base(3)),
        };
        assert_eq!(eval_bounds(&e), ("3".into(), "3".into()));
    }

    #[test]
    fn free_algebras() {
        assert_eq!(
            eval_bounds(&ConstructionExpr::FreeAlgebra { m: 2 }),
            ("inf".into(), "inf".into())
        );
        assert_eq!(
            eval_bounds(&ConstructionExpr::FreeAlgebra { m: 1 }),
            ("1".into(), "1".into())
        );
        assert_eq!(
            eval_bounds(&ConstructionExpr::FreeAlgebra { m: 0 }),
            ("0".into(), "0".into())
        );
    }

    #[test]
    fn quotients_forget_the_lower_bound() {
        let e = ConstructionExpr::Quotient {
            child: Box::new(base(4)),
        };
        assert_eq!(eval_bounds(&e), ("0".into(), "4".into()));
    }

    #[test]
    fn group_ring_and_identity_rules_compose() {
        let e = ConstructionExpr::Localization {
            child: Box::new(ConstructionExpr::GroupRing {
                child: Box::new(ConstructionExpr::AssocGraded {
                    child: Box::new(base(2)),
                }),
                group_order: 6,
            }),
        };
        assert_eq!(eval_bounds(&e), ("2".into(), "2".into()));
    }

    #[test]
    fn module_rules() {
        let reg = ConstructionExpr::RegularModule {
            child: Box::new(base(3)),
        };
        assert_eq!(eval_bounds(&reg), ("3".into(), "3".into()));
        let sum = ConstructionExpr::ModuleSum {
            children: vec![
                ConstructionExpr::RegularModule {
                    child: Box::new(base(1)),
                },
                ConstructionExpr::RegularModule {
                    child: Box::new(base(2)),
                },
            ],
        };
        assert_eq!(eval_bounds(&sum), ("2".into(), "2".into()));
        let sub = ConstructionExpr::SubOrQuotientModule {
            child: Box::new(ConstructionExpr::RegularModule {
                child: Box::new(base(2)),
            }),
        };
        assert_eq!(eval_bounds(&sub), ("0".into(), "2".into()));
    }

    #[test]
    fn tdeg_needs_commutativity_for_equality() {
        let comm = ConstructionExpr::Tdeg {
            child: Box::new(commutative_base(2)),
        };
        assert_eq!(eval_bounds(&comm), ("2".into(), "2".into()));
        let noncomm = ConstructionExpr::Tdeg {
            child: Box::new(base(2)),
        };
        assert_eq!(eval_bounds(&noncomm), ("0".into(), "2".into()));
    }

    #[test]
    fn tdeg_rejected_below_the_root() {
        let e = ConstructionExpr::Quotient {
            child: Box::new(ConstructionExpr::Tdeg {
                child: Box::new(base(2)),
            }),
        };
        assert!(matches!(
            eval_construction(&e),
            Err(CalculusError::MalformedExpression(_))
        ));
    }

    #[test]
    fn sort_mismatches_are_malformed() {
        let e = ConstructionExpr::PolyExt {
            child: Box::new(ConstructionExpr::RegularModule {
                child: Box::new(base(1)),
            }),
            m: 1,
        };
        assert!(matches!(
            eval_construction(&e),
            Err(CalculusError::MalformedExpression(_))
        ));
        let e = ConstructionExpr::SubOrQuotientModule {
            child: Box::new(base(1)),
        };
        assert!(matches!(
            eval_construction(&e),
            Err(CalculusError::MalformedExpression(_))
        ));
    }

    #[test]
    fn polyext_is_additive() {
        let nested = ConstructionExpr::PolyExt {
            child: Box::new(ConstructionExpr::PolyExt {
                child: Box::new(base(1)),
                m: 2,
            }),
            m: 3,
        };
        let flat = ConstructionExpr::PolyExt {
            child: Box::new(base(1)),
            m: 5,
        };
        assert_eq!(eval_bounds(&nested), eval_bounds(&flat));
    }

    #[test]
    fn skew_extension_of_the_base_ring_matches_polyext() {
        let skew = ConstructionExpr::SkewPBW {
            child: Box::new(commutative_base(0)),
            t: 3,
        };
        let poly = ConstructionExpr::PolyExt {
            child: Box::new(commutative_base(0)),
            m: 3,
        };
        assert_eq!(eval_bounds(&skew), ("3".into(), "3".into()));
        assert_eq!(eval_bounds(&skew), eval_bounds(&poly));
    }

    #[test]
    fn infinity_propagates_through_shifts_and_sums() {
        let e = ConstructionExpr::PolyExt {
            child: Box::new(ConstructionExpr::FreeAlgebra { m: 2 }),
            m: 4,
        };
        assert_eq!(eval_bounds(&e), ("inf".into(), "inf".into()));
        let t = ConstructionExpr::Tensor {
            left: Box::new(ConstructionExpr::FreeAlgebra { m: 2 }),
            right: Box::new(base(1)),
            fg_witness: false,
        };
        assert_eq!(eval_bounds(&t), ("inf".into(), "inf".into()));
    }

    #[test]
    fn bergman_normalization() {
        let half = BigRational::new(BigInt::from(3), BigInt::from(2));
        let b = DimBound::new(DimValue::Finite(half.clone()), DimValue::from_usize(5)).unwrap();
        let n = bergman_normalize(&b).unwrap();
        assert_eq!(n.lo().to_string(), "2");
        assert_eq!(n.hi().to_string(), "5");

        let b = DimBound::new(DimValue::zero(), DimValue::Finite(half.clone())).unwrap();
        let n = bergman_normalize(&b).unwrap();
        assert_eq!((n.lo().to_string(), n.hi().to_string()), ("0".into(), "1".into()));

        let exact2 = DimBound::exact(DimValue::from_usize(2));
        assert_eq!(bergman_normalize(&exact2).unwrap(), exact2);

        let gap = DimBound::exact(DimValue::Finite(half));
        assert_eq!(bergman_normalize(&gap), Err(CalculusError::EmptyBound));
    }

    #[test]
    fn widening_a_base_never_tightens_the_output() {
        let narrow = ConstructionExpr::SkewPBW {
            child: Box::new(base(1)),
            t: 2,
        };
        let wide = ConstructionExpr::SkewPBW {
            child: Box::new(ConstructionExpr::Base {
                name: String::new(),
                bound: DimBound::new(DimValue::zero(), DimValue::from_usize(4)).unwrap(),
                commutative: false,
                fin_gen: false,
            }),
            t: 2,
        };
        let (nb, _) = eval_construction(&narrow).unwrap();
        let (wb, _) = eval_construction(&wide).unwrap();
        assert!(wb.lo() <= nb.lo());
        assert!(wb.hi() >= nb.hi());
    }

    #[test]
    fn rendering_is_exact_text() {
        assert_eq!(DimValue::from_usize(7).to_string(), "7");
        assert_eq!(DimValue::Infinity.to_string(), "inf");
        let three_halves = DimValue::Finite(BigRational::new(BigInt::from(3), BigInt::from(2)));
        assert_eq!(three_halves.to_string(), "1.5");
        let seven_thirds = DimValue::Finite(BigRational::new(BigInt::from(7), BigInt::from(3)));
        assert_eq!(seven_thirds.to_string(), "7/3");
        let loglog = DimValue::Finite(BigRational::new(BigInt::from(13517), BigInt::from(10000)));
        assert_eq!(loglog.to_string(), "1.3517");
    }

    #[test]
    fn trace_is_bottom_up_with_one_entry_per_node() {
        let e = ConstructionExpr::SkewPBW {
            child: Box::new(commutative_base(1)),
            t: 1,
        };
        let (_, trace) = eval_construction(&e).unwrap();
        assert_eq!(trace.len(), 2);
        assert_eq!(trace[0].rule, "base");
        assert_eq!(trace[1].rule, "skew-pbw");
        let js = eval_to_json(&DimBound::exact(DimValue::from_usize(2)), &trace);
        assert_eq!(js["lo"], "2");
        assert_eq!(js["exact"], true);
        assert_eq!(js["trace"][1]["rule"], "skew-pbw");
    }
}
