//! Sparse multivariate polynomials and rational functions over the exact
//! scalar field, together with the gcd / resultant / dispersion machinery
//! that Gosper-style summation needs.
//!
//! The variable set is fixed: `n` and `k` are the discrete variables,
//! `b` and `c` are the complement-solver parameters, and `j` is reserved
//! for shift amounts inside dispersion resultants. Polynomials are viewed
//! univariately in a "main" variable with the remaining variables living
//! in the coefficients, which is exactly the tower the telescoping
//! algorithms work over.

pub mod gcd;
pub(crate) mod parse;
mod ratfunc;
mod resultant;
pub mod roots;

pub use parse::{parse_poly, parse_ratfunc};
pub use ratfunc::RatFunc;
pub use resultant::{dispersion_set, resultant};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::{ExactError, Rational, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("substitution produces an identically zero denominator")]
    IdenticallyZeroDenominator,
    #[error("degenerate elimination in root search")]
    DegenerateElimination,
    #[error(transparent)]
    Scalar(#[from] ExactError),
    #[error("polynomial parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The fixed variable universe, in lexicographic order of significance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    N = 0,
    K = 1,
    B = 2,
    C = 3,
    J = 4,
}

pub const NVARS: usize = 5;
pub const ALL_VARS: [Var; NVARS] = [Var::N, Var::K, Var::B, Var::C, Var::J];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::N => "n",
            Var::K => "k",
            Var::B => "b",
            Var::C => "c",
            Var::J => "j",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "n" => Some(Var::N),
            "k" => Some(Var::K),
            "b" => Some(Var::B),
            "c" => Some(Var::C),
            "j" => Some(Var::J),
            _ => None,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector indexed by [`ALL_VARS`].
pub type Exp = [u16; NVARS];

const ZERO_EXP: Exp = [0; NVARS];

/// Sparse multivariate polynomial. No zero coefficients are stored, so the
/// zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(ZERO_EXP, c);
        }
        MultiPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        MultiPoly::constant(Scalar::from_int(n))
    }

    pub fn var(v: Var) -> Self {
        let mut exp = ZERO_EXP;
        exp[v as usize] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exp, Scalar::one());
        MultiPoly { terms }
    }

    /// Build the affine polynomial `c0 + sum coeff_i * var_i`.
    pub fn affine(c0: Scalar, parts: &[(Var, Scalar)]) -> Self {
        let mut p = MultiPoly::constant(c0);
        for (v, coeff) in parts {
            p = &p + &MultiPoly::var(*v).mul_scalar(coeff);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&ZERO_EXP))
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            Some(Scalar::zero())
        } else if self.is_constant() {
            self.terms.get(&ZERO_EXP).cloned()
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn uses_var(&self, v: Var) -> bool {
        self.terms.keys().any(|e| e[v as usize] > 0)
    }

    /// Degree in `v`, or `None` for the zero polynomial.
    pub fn degree(&self, v: Var) -> Option<usize> {
        self.terms.keys().map(|e| e[v as usize] as usize).max()
    }

    /// Total degree over all variables, or `None` for zero.
    pub fn total_degree(&self) -> Option<usize> {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
    }

    /// Coefficient of `v^deg` as a polynomial in the remaining variables.
    pub fn coeff_of(&self, v: Var, deg: usize) -> MultiPoly {
        let vi = v as usize;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[vi] as usize == deg {
                let mut e2 = *e;
                e2[vi] = 0;
                terms.insert(e2, c.clone());
            }
        }
        MultiPoly { terms }
    }

    /// Dense coefficient list `[c_0, ..., c_d]` viewing the polynomial as
    /// univariate in `v`.
    pub fn as_univariate(&self, v: Var) -> Vec<MultiPoly> {
        let d = match self.degree(v) {
            None => return Vec::new(),
            Some(d) => d,
        };
        let mut coeffs = vec![MultiPoly::zero(); d + 1];
        let vi = v as usize;
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let deg = e2[vi] as usize;
            e2[vi] = 0;
            coeffs[deg].terms.insert(e2, c.clone());
        }
        coeffs
    }

    pub fn from_univariate(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        let x = MultiPoly::var(v);
        for c in coeffs.iter().rev() {
            acc = &acc.mul(&x) + c;
        }
        acc
    }

    /// Leading coefficient in `v` (zero polynomial gives zero).
    pub fn leading_coeff(&self, v: Var) -> MultiPoly {
        match self.degree(v) {
            None => MultiPoly::zero(),
            Some(d) => self.coeff_of(v, d),
        }
    }

    /// Leading scalar coefficient under the global lexicographic order.
    pub fn leading_scalar(&self) -> Option<&Scalar> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn neg(&self) -> MultiPoly {
        let terms = self.terms.iter().map(|(e, c)| (*e, -c)).collect();
        MultiPoly { terms }
    }

    pub fn add(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            match terms.get_mut(e) {
                Some(existing) => {
                    let sum = &*existing + c;
                    if sum.is_zero() {
                        terms.remove(e);
                    } else {
                        *existing = sum;
                    }
                }
                None => {
                    terms.insert(*e, c.clone());
                }
            }
        }
        MultiPoly { terms }
    }

    pub fn sub(&self, rhs: &MultiPoly) -> MultiPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &MultiPoly) -> MultiPoly {
        let mut terms: BTreeMap<Exp, Scalar> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..NVARS {
                    e[i] = e[i].checked_add(eb[i]).expect("exponent overflow");
                }
                let prod = ca * cb;
                match terms.get_mut(&e) {
                    Some(existing) => {
                        let sum = &*existing + &prod;
                        if sum.is_zero() {
                            terms.remove(&e);
                        } else {
                            *existing = sum;
                        }
                    }
                    None => {
                        if !prod.is_zero() {
                            terms.insert(e, prod);
                        }
                    }
                }
            }
        }
        MultiPoly { terms }
    }

    pub fn mul_scalar(&self, s: &Scalar) -> MultiPoly {
        if s.is_zero() {
            return MultiPoly::zero();
        }
        let terms = self.terms.iter().map(|(e, c)| (*e, c * s)).collect();
        MultiPoly { terms }
    }

    pub fn div_scalar(&self, s: &Scalar) -> MultiPoly {
        self.mul_scalar(&s.try_invert().expect("division by zero scalar"))
    }

    pub fn pow(&self, exp: usize) -> MultiPoly {
        let mut result = MultiPoly::one();
        let mut acc = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&acc);
            }
            e >>= 1;
            if e > 0 {
                acc = acc.mul(&acc);
            }
        }
        result
    }

    /// Substitute `v := p` for an arbitrary polynomial `p` (Horner).
    pub fn subst(&self, v: Var, p: &MultiPoly) -> MultiPoly {
        if !self.uses_var(v) {
            return self.clone();
        }
        let coeffs = self.as_univariate(v);
        let mut acc = MultiPoly::zero();
        for c in coeffs.iter().rev() {
            acc = &acc.mul(p) + c;
        }
        acc
    }

    /// Substitute `v := v + offset`.
    pub fn shift(&self, v: Var, offset: i64) -> MultiPoly {
        if offset == 0 {
            return self.clone();
        }
        let p = &MultiPoly::var(v) + &MultiPoly::from_int(offset);
        self.subst(v, &p)
    }

    /// Substitute a scalar value for `v`.
    pub fn subst_scalar(&self, v: Var, value: &Scalar) -> MultiPoly {
        self.subst(v, &MultiPoly::constant(value.clone()))
    }

    /// Evaluate at a full assignment; variables missing from `point`
    /// must not occur in the polynomial.
    pub fn eval(&self, point: &[(Var, Scalar)]) -> Scalar {
        let mut p = self.clone();
        for (v, s) in point {
            p = p.subst_scalar(*v, s);
        }
        p.as_constant().expect("evaluation left free variables")
    }

    /// Formal derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        let vi = v as usize;
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let d = e[vi];
            if d > 0 {
                let mut e2 = *e;
                e2[vi] = d - 1;
                let coeff = c * &Scalar::from_int(d as i64);
                terms.insert(e2, coeff);
            }
        }
        let mut p = MultiPoly { terms };
        p.prune();
        p
    }

    /// Radicand appearing in any coefficient, if any.
    pub fn radicand(&self) -> Option<u64> {
        self.terms.values().find_map(|c| c.radicand())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Descending lexicographic term order gives the familiar layout.
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let (neg, abs) = match c.signum() {
                -1 => (true, -c),
                _ => (false, c.clone()),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let monomial: Vec<String> = ALL_VARS
                .iter()
                .filter(|v| e[**v as usize] > 0)
                .map(|v| {
                    let d = e[*v as usize];
                    if d == 1 {
                        v.name().to_string()
                    } else {
                        format!("{}^{}", v.name(), d)
                    }
                })
                .collect();
            let coeff_str = match &abs {
                s if s.is_rational() => s.to_string(),
                s => format!("({})", s),
            };
            if monomial.is_empty() {
                f.write_str(&coeff_str)?;
            } else if abs.is_one() {
                f.write_str(&monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff_str, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl<'a> std::ops::$trait<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                MultiPoly::$method(self, rhs)
            }
        }
    };
}

poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::neg(self)
    }
}

/// Univariate polynomial in `v` from integer coefficients `[c0, c1, ...]`.
pub fn int_poly(v: Var, coeffs: &[i64]) -> MultiPoly {
    let coeffs: Vec<MultiPoly> = coeffs.iter().map(|&c| MultiPoly::from_int(c)).collect();
    MultiPoly::from_univariate(v, &coeffs)
}

/// Rational constant as a polynomial.
pub fn rat_const(num: i64, den: i64) -> MultiPoly {
    MultiPoly::constant(Scalar::Rat(Rational::new(num, den)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let n = MultiPoly::var(Var::N);
        let k = MultiPoly::var(Var::K);
        let p = &n.mul(&n) + &k.mul_scalar(&Scalar::from_int(2));
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(p.degree(Var::N), Some(2));
        assert_eq!(p.degree(Var::K), Some(1));
        assert_eq!(p.to_string(), "n^2 + 2*k");
    }

    #[test]
    fn univariate_roundtrip() {
        let p = int_poly(Var::N, &[1, 0, -3, 5]);
        let coeffs = p.as_univariate(Var::N);
        assert_eq!(coeffs.len(), 4);
        assert_eq!(MultiPoly::from_univariate(Var::N, &coeffs), p);
    }

    #[test]
    fn shift_substitution() {
        // (n+1)^2 = n^2 + 2n + 1
        let p = int_poly(Var::N, &[0, 0, 1]);
        assert_eq!(p.shift(Var::N, 1), int_poly(Var::N, &[1, 2, 1]));
        // n -> n + j
        let q = int_poly(Var::N, &[0, 1]);
        let shifted = q.subst(Var::N, &(&MultiPoly::var(Var::N) + &MultiPoly::var(Var::J)));
        assert_eq!(shifted.degree(Var::J), Some(1));
    }

    #[test]
    fn eval_and_derivative() {
        let p = int_poly(Var::N, &[1, 2, 3]); // 3n^2+2n+1
        let v = p.eval(&[(Var::N, Scalar::from_int(2))]);
        assert_eq!(v, Scalar::from_int(17));
        assert_eq!(p.derivative(Var::N), int_poly(Var::N, &[2, 6]));
    }

    #[test]
    fn display_with_surd_coeff() {
        let z = crate::exact::parse_scalar("9-4*sqrt(5)").unwrap();
        let p = &MultiPoly::var(Var::N).mul_scalar(&z) + &MultiPoly::one();
        assert_eq!(p.to_string(), "(9-4*sqrt(5))*n + 1");
    }
}
