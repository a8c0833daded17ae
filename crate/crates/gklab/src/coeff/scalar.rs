//! Exact scalars: arbitrary-precision integers and univariate integer
//! polynomials in a named domain parameter.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient domain of a presentation or matrix: the integers, or
/// integer polynomials in a single named parameter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum DomainSpec {
    Integers,
    IntegersWithParameter(String),
}

impl DomainSpec {
    /// Parameter name, if the domain has one.
    pub fn parameter_name(&self) -> Option<&str> {
        match self {
            DomainSpec::Integers => None,
            DomainSpec::IntegersWithParameter(name) => Some(name),
        }
    }

    /// Name used when rendering scalars. Integer domains never print a
    /// parameter, so the fallback is arbitrary.
    pub fn display_parameter(&self) -> &str {
        self.parameter_name().unwrap_or("q")
    }

    /// Whether a scalar is an element of this domain.
    pub fn admits(&self, s: &Scalar) -> bool {
        match self {
            DomainSpec::Integers => s.is_integer(),
            DomainSpec::IntegersWithParameter(_) => true,
        }
    }
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DomainSpec::Integers => write!(f, "Z"),
            DomainSpec::IntegersWithParameter(name) => write!(f, "Z[{name}]"),
        }
    }
}

/// An element of the coefficient domain, stored as a dense univariate
/// polynomial in the domain parameter: `coeffs[k]` multiplies the k-th
/// power of the parameter. No trailing zero coefficients are kept, so the
/// leading coefficient is nonzero and zero is the empty list. Integers are
/// exactly the scalars of degree at most zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    coeffs: Vec<BigInt>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::integer(BigInt::from(n))
    }

    pub fn integer(n: BigInt) -> Self {
        Scalar::normalize(vec![n])
    }

    /// The domain parameter itself.
    pub fn parameter() -> Self {
        Scalar::monomial(BigInt::one(), 1)
    }

    /// `c` times the k-th power of the parameter.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Scalar::normalize(coeffs)
    }

    pub(crate) fn normalize(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Scalar { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree in the parameter; `None` for the zero scalar.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True when the scalar lies in the integers (degree at most zero).
    pub fn is_integer(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        match self.coeffs.len() {
            0 => Some(BigInt::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// Units of the domain: plus and minus one.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn pow(&self, k: usize) -> Scalar {
        let mut acc = Scalar::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Greatest common divisor of the integer coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn primitive_part(&self) -> Scalar {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        Scalar::normalize(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// The canonical associate: scaled by a unit so the leading
    /// coefficient is positive.
    fn canonical_associate(&self) -> Scalar {
        match self.leading() {
            Some(l) if l.is_negative() => -self,
            _ => self.clone(),
        }
    }

    fn scale_int(&self, c: &BigInt) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar::normalize(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `c * parameter^k * self`.
    fn shift_scale(&self, c: &BigInt, k: usize) -> Scalar {
        if self.is_zero() || c.is_zero() {
            return Scalar::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|x| x * c));
        Scalar::normalize(coeffs)
    }

    /// Exact division: `Some(q)` with `self = q * d`, or `None` when `d`
    /// does not divide `self` in the domain.
    pub fn div_exact(&self, d: &Scalar) -> Option<Scalar> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let dd = d.degree().expect("nonzero");
        let ld = d.leading().expect("nonzero");
        let dr0 = self.degree().expect("nonzero");
        if dr0 < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); dr0 - dd + 1];
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree().expect("nonzero");
            if dr < dd {
                return None;
            }
            let (quot, rem) = r.leading().expect("nonzero").div_rem(ld);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &d.shift_scale(&quot, dr - dd);
            q[dr - dd] = quot;
        }
        Some(Scalar::normalize(q))
    }

    /// Canonical greatest common divisor: nonnegative content times the
    /// primitive gcd with positive leading coefficient. The gcd of two
    /// zeros is zero.
    pub fn gcd(a: &Scalar, b: &Scalar) -> Scalar {
        if a.is_zero() {
            return b.canonical_associate();
        }
        if b.is_zero() {
            return a.canonical_associate();
        }
        if a.is_integer() && b.is_integer() {
            return Scalar::integer(self_int(a).gcd(&self_int(b)));
        }
        let content = a.content().gcd(&b.content());
        let mut p = a.primitive_part();
        let mut q = b.primitive_part();
        if p.degree() < q.degree() {
            std::mem::swap(&mut p, &mut q);
        }
        // Euclid on primitive parts with pseudo-remainders; taking the
        // primitive part each round keeps coefficients small.
        while !q.is_zero() {
            let r = pseudo_rem(&p, &q).primitive_part();
            p = q;
            q = r;
        }
        p.canonical_associate().scale_int(&content)
    }

    /// Render with the given parameter name, highest power first.
    pub fn render(&self, param: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                    out.push(' ');
                }
                out.push_str(param);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }
}

fn self_int(s: &Scalar) -> BigInt {
    s.as_integer().expect("integer scalar")
}

/// Remainder of a scaled Euclidean step: repeatedly cancels the leading
/// term of `a` against `b`, multiplying through by the leading coefficient
/// of `b`. Only the primitive part of the result is meaningful.
fn pseudo_rem(a: &Scalar, b: &Scalar) -> Scalar {
    let db = b.degree().expect("nonzero divisor");
    let lb = b.leading().expect("nonzero divisor").clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree().expect("nonzero");
        if dr < db {
            break;
        }
        let lr = r.leading().expect("nonzero").clone();
        r = &r.scale_int(&lb) - &b.shift_scale(&lr, dr - db);
    }
    r
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            let b = rhs.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
            coeffs.push(a + b);
        }
        Scalar::normalize(coeffs)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Scalar::normalize(coeffs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::normalize(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({})", self.render("q"))
    }
}
