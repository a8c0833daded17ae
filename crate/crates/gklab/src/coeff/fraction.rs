//! Normalized fractions of scalars: elements of the fraction field of the
//! coefficient domain.

use super::scalar::Scalar;
use super::CoeffError;
use num_traits::Signed;

/// A fraction of scalars in lowest terms. The denominator is nonzero with
/// positive leading coefficient, the gcd of numerator and denominator is a
/// unit, and zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: Scalar,
    den: Scalar,
}

/// Normalize a numerator/denominator pair into a canonical [`Fraction`].
pub fn fraction_normalize(num: Scalar, den: Scalar) -> Result<Fraction, CoeffError> {
    Fraction::new(num, den)
}

impl Fraction {
    pub fn new(num: Scalar, den: Scalar) -> Result<Self, CoeffError> {
        if den.is_zero() {
            return Err(CoeffError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Fraction {
                num: Scalar::zero(),
                den: Scalar::one(),
            });
        }
        let g = Scalar::gcd(&num, &den);
        let mut num = num.div_exact(&g).expect("gcd divides numerator");
        let mut den = den.div_exact(&g).expect("gcd divides denominator");
        if den.leading().expect("nonzero").is_negative() {
            num = -&num;
            den = -&den;
        }
        Ok(Fraction { num, den })
    }

    pub fn zero() -> Self {
        Fraction::from_scalar(Scalar::zero())
    }

    pub fn one() -> Self {
        Fraction::from_scalar(Scalar::one())
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Fraction {
            num: s,
            den: Scalar::one(),
        }
    }

    pub fn numerator(&self) -> &Scalar {
        &self.num
    }

    pub fn denominator(&self) -> &Scalar {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn add(&self, rhs: &Fraction) -> Fraction {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        Fraction::new(num, den).expect("denominators are nonzero")
    }

    pub fn sub(&self, rhs: &Fraction) -> Fraction {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Fraction) -> Fraction {
        Fraction::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("denominators are nonzero")
    }

    pub fn div(&self, rhs: &Fraction) -> Result<Fraction, CoeffError> {
        Fraction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> Fraction {
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn render(&self, param: &str) -> String {
        if self.den.is_one() {
            return self.num.render(param);
        }
        let wrap = |s: &Scalar| {
            let text = s.render(param);
            if text.contains(' ') {
                format!("({text})")
            } else {
                text
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl std::fmt::Debug for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Fraction({})", self.render("q"))
    }
}
