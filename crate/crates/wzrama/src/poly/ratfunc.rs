//! Rational functions: quotients of multivariate polynomials kept in a
//! canonical reduced form (coprime, denominator lex-monic).

use std::fmt;

use crate::exact::Scalar;
use crate::poly::gcd::mv_gcd;
use crate::poly::{MultiPoly, PolyError, Var};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Build and normalize `num/den`. Panics on a zero denominator; use
    /// [`RatFunc::try_new`] when the denominator is data-driven.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: MultiPoly, den: MultiPoly) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut f = RatFunc { num, den };
        f.normalize();
        Ok(f)
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn from_scalar(s: Scalar) -> Self {
        Self::from_poly(MultiPoly::constant(s))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(MultiPoly::from_int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(MultiPoly::var(v))
    }

    pub fn numerator(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.as_poly().and_then(|p| p.as_constant())
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.num.uses_var(v) || self.den.uses_var(v)
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MultiPoly::one();
            return;
        }
        let g = mv_gcd(&self.num, &self.den);
        if !g.is_one() {
            self.num = self.num.div_exact(&g).expect("gcd divides numerator");
            self.den = self.den.div_exact(&g).expect("gcd divides denominator");
        }
        // Canonical form: denominator has leading scalar 1 under lex order.
        let lc = self.den.leading_scalar().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.try_invert().unwrap();
            self.num = self.num.mul_scalar(&inv);
            self.den = self.den.mul_scalar(&inv);
        }
    }

    /// Monic normalization for operands already known to be coprime.
    fn reduced(num: MultiPoly, den: MultiPoly) -> RatFunc {
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc = den.leading_scalar().expect("nonzero denominator").clone();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.try_invert().unwrap();
            RatFunc { num: num.mul_scalar(&inv), den: den.mul_scalar(&inv) }
        }
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        // Classical reduced addition: only gcd(b, d) and one correction
        // gcd can cancel, keeping intermediate products small.
        let g = mv_gcd(&self.den, &rhs.den);
        if g.is_one() {
            let num = &self.num.mul(&rhs.den) + &rhs.num.mul(&self.den);
            return RatFunc::reduced(num, self.den.mul(&rhs.den));
        }
        let b1 = self.den.div_exact(&g).unwrap();
        let d1 = rhs.den.div_exact(&g).unwrap();
        let num = &self.num.mul(&d1) + &rhs.num.mul(&b1);
        if num.is_zero() {
            return RatFunc::zero();
        }
        let h = mv_gcd(&num, &g);
        if h.is_one() {
            RatFunc::reduced(num, g.mul(&b1).mul(&d1))
        } else {
            let num = num.div_exact(&h).unwrap();
            let g2 = g.div_exact(&h).unwrap();
            RatFunc::reduced(num, g2.mul(&b1).mul(&d1))
        }
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        // Cross-reduce so the products below are already coprime.
        let g1 = mv_gcd(&self.num, &rhs.den);
        let g2 = mv_gcd(&rhs.num, &self.den);
        let a = self.num.div_exact(&g1).unwrap();
        let d = rhs.den.div_exact(&g1).unwrap();
        let c = rhs.num.div_exact(&g2).unwrap();
        let b = self.den.div_exact(&g2).unwrap();
        RatFunc::reduced(a.mul(&c), b.mul(&d))
    }

    pub fn div(&self, rhs: &RatFunc) -> RatFunc {
        assert!(!rhs.is_zero(), "division by zero rational function");
        self.mul(&rhs.recip())
    }

    pub fn recip(&self) -> RatFunc {
        assert!(!self.is_zero(), "reciprocal of zero");
        RatFunc::reduced(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, exp: i64) -> RatFunc {
        if exp == 0 {
            return RatFunc::one();
        }
        let base = if exp < 0 { self.recip() } else { self.clone() };
        let e = exp.unsigned_abs() as usize;
        RatFunc::new(base.num.pow(e), base.den.pow(e))
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> RatFunc {
        RatFunc::new(self.num.mul(p), self.den.clone())
    }

    /// Substitute `v := p` (a polynomial), exact.
    pub fn subst(&self, v: Var, p: &MultiPoly) -> Result<RatFunc, PolyError> {
        let num = self.num.subst(v, p);
        let den = self.den.subst(v, p);
        if den.is_zero() {
            return Err(PolyError::IdenticallyZeroDenominator);
        }
        Ok(RatFunc::new(num, den))
    }

    pub fn subst_scalar(&self, v: Var, value: &Scalar) -> Result<RatFunc, PolyError> {
        self.subst(v, &MultiPoly::constant(value.clone()))
    }

    /// Substitute `v := v + offset`.
    pub fn shift(&self, v: Var, offset: i64) -> RatFunc {
        let p = &MultiPoly::var(v) + &MultiPoly::from_int(offset);
        self.subst(v, &p).expect("shift cannot zero a denominator")
    }

    /// Coefficient of `v^degree`, for rational functions whose denominator
    /// is free of `v` (e.g. operator polynomials in the shift variable).
    pub fn coeff_in(&self, v: Var, degree: usize) -> RatFunc {
        assert!(
            !self.den.uses_var(v),
            "coefficient extraction requires a denominator free of {}",
            v
        );
        RatFunc::new(self.num.coeff_of(v, degree), self.den.clone())
    }

    /// Full evaluation; all variables of the function must be assigned.
    pub fn eval(&self, point: &[(Var, Scalar)]) -> Result<Scalar, PolyError> {
        let den = self.den.eval(point);
        if den.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let num = self.num.eval(point);
        Ok(&num / &den)
    }

    pub fn radicand(&self) -> Option<u64> {
        self.num.radicand().or_else(|| self.den.radicand())
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! ratfunc_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> std::ops::$trait<&'a RatFunc> for &'a RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                RatFunc::$method(self, rhs)
            }
        }
    };
}

ratfunc_binop!(Add, add);
ratfunc_binop!(Sub, sub);
ratfunc_binop!(Mul, mul);
ratfunc_binop!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, Var};

    #[test]
    fn normalize_cancels() {
        // (n^2 - 1)/(n - 1) -> n + 1
        let f = RatFunc::new(int_poly(Var::N, &[-1, 0, 1]), int_poly(Var::N, &[-1, 1]));
        assert_eq!(f.as_poly().unwrap(), &int_poly(Var::N, &[1, 1]));
    }

    #[test]
    fn normalize_idempotent_and_value_preserving() {
        let f = RatFunc::new(int_poly(Var::N, &[0, 2, 2]), int_poly(Var::N, &[2, 4]));
        let g = RatFunc::new(f.numerator().clone(), f.denominator().clone());
        assert_eq!(f, g);
        // cross-multiplication identity against the unreduced form
        let lhs = int_poly(Var::N, &[0, 2, 2]).mul(g.denominator());
        let rhs = g.numerator().mul(&int_poly(Var::N, &[2, 4]));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitute_example() {
        // (n+2k)/(n+1) at k := 0 -> n/(n+1)
        let num = &MultiPoly::var(Var::N) + &int_poly(Var::K, &[0, 2]);
        let f = RatFunc::new(num, int_poly(Var::N, &[1, 1]));
        let g = f.subst_scalar(Var::K, &Scalar::zero()).unwrap();
        assert_eq!(g.numerator(), &int_poly(Var::N, &[0, 1]));
        assert_eq!(g.denominator(), &int_poly(Var::N, &[1, 1]));
    }

    #[test]
    fn coeff_extraction() {
        // (k^2 * n + k + 3)/(n+1), coefficient of k^2 -> n/(n+1)
        let num = &MultiPoly::var(Var::K).pow(2).mul(&MultiPoly::var(Var::N))
            + &(&MultiPoly::var(Var::K) + &MultiPoly::from_int(3));
        let f = RatFunc::new(num, int_poly(Var::N, &[1, 1]));
        let c2 = f.coeff_in(Var::K, 2);
        assert_eq!(c2.numerator(), &int_poly(Var::N, &[0, 1]));
    }

    #[test]
    fn canonical_monic_denominator() {
        // 1/(2n - 2) must store denominator n - 1
        let f = RatFunc::new(MultiPoly::one(), int_poly(Var::N, &[-2, 2]));
        assert_eq!(f.denominator(), &int_poly(Var::N, &[-1, 1]));
        assert_eq!(f.to_string(), "(1/2)/(n - 1)");
    }

    #[test]
    fn arithmetic() {
        let n = RatFunc::var(Var::N);
        let one = RatFunc::one();
        let f = &one / &n; // 1/n
        let g = &one / &(&n + &one); // 1/(n+1)
        let h = &f - &g; // 1/(n(n+1))
        assert_eq!(h.numerator(), &MultiPoly::one());
        assert_eq!(
            h.denominator(),
            &int_poly(Var::N, &[0, 1, 1])
        );
    }
}
