//! Exact scalar arithmetic: arbitrary-precision rationals and quadratic
//! surds `a + b*sqrt(d)`, the coefficient field for everything symbolic.
//!
//! One radicand `d` is in play per computation context; combining two
//! different radicands is an error rather than an implicit field tower.
//! Rationals promote into `Q(sqrt(d))` with `b = 0` on demand.

pub(crate) mod parse;
mod rational;
mod surd;

pub use parse::parse_scalar;
pub use rational::Rational;
pub use surd::{is_square_free, QuadSurd};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed radicands: sqrt({0}) and sqrt({1})")]
    MixedRadicand(u64, u64),
    #[error("scalar parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Exact field scalar: a rational or an element of Q(sqrt(d)).
///
/// A surd with `b = 0` is normalized down to `Rat`, so equality is value
/// equality regardless of how a rational was produced.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(Rational),
    Surd(QuadSurd),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(Rational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(Rational::from_int(n))
    }

    pub fn surd(a: Rational, b: Rational, d: u64) -> Self {
        Scalar::normalize(QuadSurd::new(a, b, d))
    }

    fn normalize(s: QuadSurd) -> Self {
        if s.is_rational() {
            Scalar::Rat(s.a)
        } else {
            Scalar::Surd(s)
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Surd(s) => s.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_one())
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, Scalar::Rat(_))
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Surd(_) => None,
        }
    }

    pub fn radicand(&self) -> Option<u64> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Surd(s) => Some(s.d),
        }
    }

    /// View as an element of Q(sqrt(d)).
    fn promote(&self, d: u64) -> QuadSurd {
        match self {
            Scalar::Rat(q) => QuadSurd::new(q.clone(), Rational::zero(), d),
            Scalar::Surd(s) => {
                debug_assert_eq!(s.d, d);
                s.clone()
            }
        }
    }

    fn common_radicand(&self, rhs: &Scalar) -> Result<Option<u64>, ExactError> {
        match (self.radicand(), rhs.radicand()) {
            (None, None) => Ok(None),
            (Some(d), None) | (None, Some(d)) => Ok(Some(d)),
            (Some(d1), Some(d2)) if d1 == d2 => Ok(Some(d1)),
            (Some(d1), Some(d2)) => Err(ExactError::MixedRadicand(d1, d2)),
        }
    }

    pub fn try_add(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        Ok(match self.common_radicand(rhs)? {
            None => Scalar::Rat(self.as_rational().unwrap() + rhs.as_rational().unwrap()),
            Some(d) => Scalar::normalize(self.promote(d).add(&rhs.promote(d))),
        })
    }

    pub fn try_sub(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        Ok(match self.common_radicand(rhs)? {
            None => Scalar::Rat(self.as_rational().unwrap() - rhs.as_rational().unwrap()),
            Some(d) => Scalar::normalize(self.promote(d).sub(&rhs.promote(d))),
        })
    }

    pub fn try_mul(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        Ok(match self.common_radicand(rhs)? {
            None => Scalar::Rat(self.as_rational().unwrap() * rhs.as_rational().unwrap()),
            Some(d) => Scalar::normalize(self.promote(d).mul(&rhs.promote(d))),
        })
    }

    pub fn try_div(&self, rhs: &Scalar) -> Result<Scalar, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        self.try_mul(&rhs.try_invert()?)
    }

    pub fn try_invert(&self) -> Result<Scalar, ExactError> {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    Err(ExactError::DivisionByZero)
                } else {
                    Ok(Scalar::Rat(q.recip()))
                }
            }
            Scalar::Surd(s) => Ok(Scalar::normalize(s.invert())),
        }
    }

    /// Conjugation `a + b*sqrt(d) -> a - b*sqrt(d)`; rationals are fixed.
    pub fn conjugate(&self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(q.clone()),
            Scalar::Surd(s) => Scalar::Surd(s.conjugate()),
        }
    }

    /// Field norm into Q: `x * conjugate(x)`.
    pub fn norm(&self) -> Rational {
        match self {
            Scalar::Rat(q) => q * q,
            Scalar::Surd(s) => s.norm(),
        }
    }

    pub fn pow(&self, exp: i64) -> Scalar {
        if exp == 0 {
            return Scalar::one();
        }
        let base = if exp < 0 {
            self.try_invert().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let mut result = Scalar::one();
        let mut acc = base;
        let mut e = exp.unsigned_abs();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &acc;
            }
            e >>= 1;
            if e > 0 {
                acc = &acc * &acc;
            }
        }
        result
    }

    /// Sign of the real value.
    pub fn signum(&self) -> i8 {
        match self {
            Scalar::Rat(q) => {
                if q.is_zero() {
                    0
                } else if q.is_positive() {
                    1
                } else {
                    -1
                }
            }
            Scalar::Surd(s) => s.signum(),
        }
    }

    /// Surd components `(a, b, d)` with `b = 0, d = None` for rationals.
    pub fn components(&self) -> (Rational, Rational, Option<u64>) {
        match self {
            Scalar::Rat(q) => (q.clone(), Rational::zero(), None),
            Scalar::Surd(s) => (s.a.clone(), s.b.clone(), Some(s.d)),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{}", q),
            Scalar::Surd(s) => write!(f, "{}", s),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::Rat(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

// The operator impls panic on mixed radicands: within one computation
// context all surds share a radicand, so that is a programming error.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $try_method:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$try_method(rhs).expect("scalar arithmetic")
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$try_method(&rhs).expect("scalar arithmetic")
            }
        }
    };
}

scalar_binop!(Add, add, try_add);
scalar_binop!(Sub, sub, try_sub);
scalar_binop!(Mul, mul, try_mul);
scalar_binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Surd(s) => Scalar::Surd(s.neg()),
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(a: (i64, i64), b: (i64, i64), d: u64) -> Scalar {
        Scalar::surd(Rational::new(a.0, a.1), Rational::new(b.0, b.1), d)
    }

    #[test]
    fn rational_field_ops() {
        let x = Scalar::Rat(Rational::new(1, 2));
        let y = Scalar::Rat(Rational::new(1, 3));
        assert_eq!(&x + &y, Scalar::Rat(Rational::new(5, 6)));
    }

    #[test]
    fn surd_unit_product() {
        let x = surd((9, 1), (-4, 1), 5);
        let y = surd((9, 1), (4, 1), 5);
        assert_eq!(&x * &y, Scalar::one());
        assert_eq!(x.try_invert().unwrap(), y);
    }

    #[test]
    fn promotion_and_collapse() {
        let r = Scalar::Rat(Rational::from_int(2));
        let s = surd((0, 1), (1, 1), 5);
        let sum = &r + &s; // 2 + sqrt(5)
        let diff = &sum - &s; // back to 2, must collapse to Rat
        assert_eq!(diff, r);
        assert!(diff.is_rational());
    }

    #[test]
    fn mixed_radicand_rejected() {
        let s5 = surd((0, 1), (1, 1), 5);
        let s2 = surd((0, 1), (1, 1), 2);
        assert_eq!(s5.try_add(&s2), Err(ExactError::MixedRadicand(5, 2)));
    }

    #[test]
    fn division_by_zero_rejected() {
        let x = Scalar::one();
        assert_eq!(x.try_div(&Scalar::zero()), Err(ExactError::DivisionByZero));
        assert_eq!(Scalar::zero().try_invert(), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(surd((9, 1), (-4, 1), 5).conjugate(), surd((9, 1), (4, 1), 5));
        let half = Scalar::Rat(Rational::new(1, 2));
        assert_eq!(half.conjugate(), half);
    }

    #[test]
    fn pow_negative() {
        let x = surd((9, 1), (-4, 1), 5);
        assert_eq!(x.pow(-1), surd((9, 1), (4, 1), 5));
        assert_eq!(x.pow(0), Scalar::one());
    }
}
