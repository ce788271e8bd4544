//! Proper hypergeometric terms in `(n, k)`: Pochhammer factors with affine
//! arguments, geometric bases `z^n` and `w^k`, and a rational prefactor.
//! These are the summands of every catalog identity; the module computes
//! their shift quotients (the input to Gosper/Zeilberger) and exact values.

mod parse;

pub use parse::{parse_term, rhs_shape_from_term};

use std::fmt;

use thiserror::Error;

use crate::exact::{Rational, Scalar};
use crate::poly::{MultiPoly, RatFunc, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("term syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("non-affine or unsupported Pochhammer argument: {0}")]
    NonAffineArgument(String),
    #[error("unknown variable '{0}' in term")]
    UnknownVariable(String),
    #[error("term is not proper for {0}-shifts")]
    ImproperTerm(String),
    #[error("pole encountered during evaluation")]
    PoleEncountered,
    #[error("evaluation not supported: {0}")]
    UnsupportedEvaluation(String),
}

/// Affine Pochhammer argument `constant + n_coeff*n + k_coeff*k`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AffineArg {
    pub constant: Scalar,
    pub n_coeff: Rational,
    pub k_coeff: Rational,
}

impl AffineArg {
    pub fn constant_only(c: Scalar) -> Self {
        AffineArg { constant: c, n_coeff: Rational::zero(), k_coeff: Rational::zero() }
    }

    pub fn as_poly(&self) -> MultiPoly {
        MultiPoly::affine(
            self.constant.clone(),
            &[
                (Var::N, Scalar::Rat(self.n_coeff.clone())),
                (Var::K, Scalar::Rat(self.k_coeff.clone())),
            ],
        )
    }

    /// Value at integer/rational `(n, k)`.
    pub fn value_at(&self, n: &Rational, k: &Rational) -> Scalar {
        let lin = &(&self.n_coeff * n) + &(&self.k_coeff * k);
        &self.constant + &Scalar::Rat(lin)
    }
}

impl fmt::Display for AffineArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        if !self.constant.is_zero() {
            write!(f, "{}", self.constant)?;
            wrote = true;
        }
        for (coeff, name) in [(&self.n_coeff, "n"), (&self.k_coeff, "k")] {
            if coeff.is_zero() {
                continue;
            }
            let (sign, mag) = if coeff.is_negative() {
                ("-", coeff.abs())
            } else {
                ("+", coeff.clone())
            };
            if wrote {
                write!(f, "{}", sign)?;
            } else if sign == "-" {
                write!(f, "-")?;
            }
            if mag.is_one() {
                write!(f, "{}", name)?;
            } else {
                write!(f, "{}*{}", mag, name)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// One Pochhammer factor `poch(arg, idx)^power` with `idx` in `{n, k}`.
#[derive(Clone, PartialEq, Eq)]
pub struct PochFactor {
    pub arg: AffineArg,
    pub idx: Var,
    pub power: u32,
}

/// A proper hypergeometric term
/// `prod poch / prod poch * z^n * w^k * prefactor(n, k)`.
#[derive(Clone, PartialEq, Eq)]
pub struct HyperTerm {
    pub numer_poch: Vec<PochFactor>,
    pub denom_poch: Vec<PochFactor>,
    pub z_base: Scalar,
    pub w_base: Scalar,
    pub prefactor: RatFunc,
}

impl Default for HyperTerm {
    fn default() -> Self {
        HyperTerm {
            numer_poch: Vec::new(),
            denom_poch: Vec::new(),
            z_base: Scalar::one(),
            w_base: Scalar::one(),
            prefactor: RatFunc::one(),
        }
    }
}

/// `(arg + delta)_n / (arg)_n` as a rational function, for integer `delta`.
/// This is the Pochhammer-splitting identity iterated.
fn poch_offset_ratio(arg: &MultiPoly, delta: i64, n: Var) -> RatFunc {
    let nv = MultiPoly::var(n);
    let mut num = MultiPoly::one();
    let mut den = MultiPoly::one();
    if delta >= 0 {
        for i in 0..delta {
            let off = MultiPoly::from_int(i);
            num = num.mul(&(&(arg + &nv) + &off));
            den = den.mul(&(arg + &off));
        }
    } else {
        for i in 1..=(-delta) {
            let off = MultiPoly::from_int(i);
            num = num.mul(&(arg - &off));
            den = den.mul(&(&(arg + &nv) - &off));
        }
    }
    RatFunc::new(num, den)
}

impl HyperTerm {
    /// Largest radicand appearing in the term's scalars, if any.
    pub fn radicand(&self) -> Option<u64> {
        self.z_base
            .radicand()
            .or_else(|| self.w_base.radicand())
            .or_else(|| self.prefactor.radicand())
            .or_else(|| {
                self.numer_poch
                    .iter()
                    .chain(&self.denom_poch)
                    .find_map(|p| p.arg.constant.radicand())
            })
    }

    /// LCM of the denominators of all `k`-coefficients. 1 means the term is
    /// proper for unit `k`-shifts; a larger value is the rescale factor
    /// needed to make it so.
    pub fn k_denominator_lcm(&self) -> u64 {
        use num_traits::ToPrimitive;
        let mut l: u64 = 1;
        for p in self.numer_poch.iter().chain(&self.denom_poch) {
            let den = p.arg.k_coeff.denom().to_u64().unwrap_or(1);
            l = num_integer::lcm(l, den);
        }
        l
    }

    /// Substitute `k := lambda * k`, producing a term whose Pochhammer
    /// `k`-coefficients have been scaled. Used to make half-integer
    /// embeddings proper before telescoping.
    pub fn k_rescaled(&self, lambda: u64) -> HyperTerm {
        assert!(lambda >= 1);
        if lambda == 1 {
            return self.clone();
        }
        let scale = Rational::from_int(lambda as i64);
        let map_poch = |p: &PochFactor| PochFactor {
            arg: AffineArg {
                constant: p.arg.constant.clone(),
                n_coeff: p.arg.n_coeff.clone(),
                k_coeff: &p.arg.k_coeff * &scale,
            },
            idx: p.idx,
            power: p.power,
        };
        let lam_k = MultiPoly::var(Var::K).mul_scalar(&Scalar::Rat(scale.clone()));
        HyperTerm {
            numer_poch: self.numer_poch.iter().map(map_poch).collect(),
            denom_poch: self.denom_poch.iter().map(map_poch).collect(),
            z_base: self.z_base.clone(),
            w_base: self.w_base.pow(lambda as i64),
            prefactor: self.prefactor.subst(Var::K, &lam_k).expect("rescale"),
        }
    }

    fn validate_poch(p: &PochFactor) -> Result<(), TermError> {
        if !p.arg.n_coeff.is_zero() {
            return Err(TermError::NonAffineArgument(format!(
                "poch({},{}): running index must not appear inside its own argument",
                p.arg, p.idx
            )));
        }
        if p.idx == Var::K && !p.arg.k_coeff.is_zero() {
            return Err(TermError::NonAffineArgument(format!(
                "poch({},k): argument of a k-running Pochhammer must be constant",
                p.arg
            )));
        }
        Ok(())
    }

    /// Structural validity of all Pochhammer factors.
    pub fn validate(&self) -> Result<(), TermError> {
        for p in self.numer_poch.iter().chain(&self.denom_poch) {
            Self::validate_poch(p)?;
        }
        Ok(())
    }

    /// Shift quotient `t(.. var+1 ..) / t(..)` as an exact rational
    /// function of `(n, k)`.
    pub fn shift_quotient(&self, var: Var) -> Result<RatFunc, TermError> {
        assert!(var == Var::N || var == Var::K);
        self.validate()?;
        let mut ratio = RatFunc::one();
        for (list, invert) in [(&self.numer_poch, false), (&self.denom_poch, true)] {
            for p in list.iter() {
                let factor = match (var, p.idx) {
                    (Var::N, Var::N) => {
                        // (A)_{n+1} / (A)_n = A + n
                        RatFunc::from_poly(&p.arg.as_poly() + &MultiPoly::var(Var::N))
                    }
                    (Var::N, Var::K) => RatFunc::one(),
                    (Var::K, Var::N) => {
                        // (A + beta)_n / (A)_n, beta = k-coefficient
                        let beta = &p.arg.k_coeff;
                        if !beta.is_integer() {
                            return Err(TermError::ImproperTerm(format!(
                                "k-coefficient {} is not an integer",
                                beta
                            )));
                        }
                        let beta = beta.to_i64().ok_or_else(|| {
                            TermError::ImproperTerm("k-coefficient overflow".into())
                        })?;
                        poch_offset_ratio(&p.arg.as_poly(), beta, Var::N)
                    }
                    (Var::K, Var::K) => {
                        // (c)_{k+1} / (c)_k = c + k
                        RatFunc::from_poly(&p.arg.as_poly() + &MultiPoly::var(Var::K))
                    }
                    _ => unreachable!(),
                };
                let factor = factor.pow(p.power as i64);
                ratio = if invert { ratio.div(&factor) } else { ratio.mul(&factor) };
            }
        }
        let geo = match var {
            Var::N => &self.z_base,
            Var::K => &self.w_base,
            _ => unreachable!(),
        };
        if !geo.is_one() {
            ratio = ratio.mul(&RatFunc::from_scalar(geo.clone()));
        }
        if !self.prefactor.is_one() {
            let shifted = self.prefactor.shift(var, 1);
            ratio = ratio.mul(&shifted.div(&self.prefactor));
        }
        Ok(ratio)
    }

    /// Exact value at integer `n >= 0` and rational `k`.
    pub fn eval_exact(&self, n: u64, k: &Rational) -> Result<Scalar, TermError> {
        self.validate()?;
        let nr = Rational::from_int(n as i64);
        let mut value = Scalar::one();
        for (list, invert) in [(&self.numer_poch, false), (&self.denom_poch, true)] {
            for p in list.iter() {
                let count = match p.idx {
                    Var::N => n,
                    Var::K => {
                        match k.to_i64() {
                            Some(ki) if ki >= 0 => ki as u64,
                            _ => {
                                return Err(TermError::UnsupportedEvaluation(
                                    "k-running Pochhammer at non-integer k".into(),
                                ))
                            }
                        }
                    }
                    _ => unreachable!(),
                };
                let start = p.arg.value_at(&nr, k);
                let mut poch = Scalar::one();
                for i in 0..count {
                    let factor = &start + &Scalar::from_int(i as i64);
                    if factor.is_zero() {
                        if invert {
                            return Err(TermError::PoleEncountered);
                        }
                        poch = Scalar::zero();
                        break;
                    }
                    poch = &poch * &factor;
                }
                let poch = poch.pow(p.power as i64);
                if invert {
                    if poch.is_zero() {
                        return Err(TermError::PoleEncountered);
                    }
                    value = &value / &poch;
                } else {
                    value = &value * &poch;
                }
            }
        }
        if !self.z_base.is_one() {
            value = &value * &self.z_base.pow(n as i64);
        }
        if !self.w_base.is_one() {
            match k.to_i64() {
                Some(ki) => value = &value * &self.w_base.pow(ki),
                None => {
                    return Err(TermError::UnsupportedEvaluation(
                        "w^k at non-integer k".into(),
                    ))
                }
            }
        }
        if !self.prefactor.is_one() {
            let point = [
                (Var::N, Scalar::Rat(nr.clone())),
                (Var::K, Scalar::Rat(k.clone())),
            ];
            let pf = self
                .prefactor
                .eval(&point)
                .map_err(|_| TermError::PoleEncountered)?;
            value = &value * &pf;
        }
        Ok(value)
    }

    /// Exact successive-term ratio `t(n+1, k) / t(n, k)` at integer `n`.
    /// Faster than substituting into [`HyperTerm::shift_quotient`] when
    /// summing a series term by term.
    pub fn eval_ratio(&self, n: u64, k: &Rational) -> Result<Scalar, TermError> {
        let nr = Rational::from_int(n as i64);
        let mut value = self.z_base.clone();
        for (list, invert) in [(&self.numer_poch, false), (&self.denom_poch, true)] {
            for p in list.iter() {
                if p.idx != Var::N {
                    continue;
                }
                let factor = p.arg.value_at(&nr, k) + Scalar::Rat(nr.clone());
                let factor = factor.pow(p.power as i64);
                if factor.is_zero() && invert {
                    return Err(TermError::PoleEncountered);
                }
                value = if invert { &value / &factor } else { &value * &factor };
            }
        }
        if !self.prefactor.is_one() {
            let at = |m: i64| -> Result<Scalar, TermError> {
                self.prefactor
                    .eval(&[
                        (Var::N, Scalar::Rat(Rational::from_int(m))),
                        (Var::K, Scalar::Rat(k.clone())),
                    ])
                    .map_err(|_| TermError::PoleEncountered)
            };
            let p1 = at(n as i64 + 1)?;
            let p0 = at(n as i64)?;
            if p0.is_zero() {
                return Err(TermError::PoleEncountered);
            }
            value = &value * &(&p1 / &p0);
        }
        Ok(value)
    }
}

impl fmt::Display for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for p in &self.numer_poch {
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "poch({},{})", p.arg, p.idx)?;
            if p.power > 1 {
                write!(f, "^{}", p.power)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        for p in &self.denom_poch {
            write!(f, "/poch({},{})", p.arg, p.idx)?;
            if p.power > 1 {
                write!(f, "^{}", p.power)?;
            }
        }
        if !self.z_base.is_one() {
            write!(f, "*({})^n", self.z_base)?;
        }
        if !self.w_base.is_one() {
            write!(f, "*({})^k", self.w_base)?;
        }
        if !self.prefactor.is_one() {
            write!(f, "*({})", self.prefactor.numerator())?;
            if !self.prefactor.denominator().is_one() {
                write!(f, "/({})", self.prefactor.denominator())?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HyperTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// The closed-form right-hand side of a certified identity, without its
/// constant: a ratio of `k`-running Pochhammers times a geometric factor.
#[derive(Clone, PartialEq, Eq)]
pub struct RhsShape {
    pub k_poch_numer: Vec<(Rational, u32)>,
    pub k_poch_denom: Vec<(Rational, u32)>,
    pub geo_base: Scalar,
}

impl RhsShape {
    /// Ratio `shape(k+1) / shape(k)` as a rational function of `k`, for the
    /// shape rescaled by `k := lambda * k` (lambda = 1 for the plain shape).
    pub fn shift_ratio(&self, lambda: u64) -> RatFunc {
        let kv = MultiPoly::var(Var::K);
        let lam = Rational::from_int(lambda as i64);
        let ratio_part = |list: &[(Rational, u32)]| -> MultiPoly {
            let mut acc = MultiPoly::one();
            for (start, power) in list.iter() {
                // (a)_{lambda(k+1)} / (a)_{lambda k} = prod_{i=0}^{lambda-1} (a + lambda k + i)
                let mut factor = MultiPoly::one();
                for i in 0..lambda {
                    let shift = Rational::from_int(i as i64) + start.clone();
                    let lin = &kv.mul_scalar(&Scalar::Rat(lam.clone()))
                        + &MultiPoly::constant(Scalar::Rat(shift));
                    factor = factor.mul(&lin);
                }
                acc = acc.mul(&factor.pow(*power as usize));
            }
            acc
        };
        let num = ratio_part(&self.k_poch_numer);
        let den = ratio_part(&self.k_poch_denom);
        let mut ratio = RatFunc::new(num, den);
        if !self.geo_base.is_one() {
            ratio = ratio.mul(&RatFunc::from_scalar(self.geo_base.pow(lambda as i64)));
        }
        ratio
    }

    pub fn radicand(&self) -> Option<u64> {
        self.geo_base.radicand()
    }
}

impl fmt::Display for RhsShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (start, power) in &self.k_poch_numer {
            if wrote {
                write!(f, "*")?;
            }
            write!(f, "poch({},k)", start)?;
            if *power > 1 {
                write!(f, "^{}", power)?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "1")?;
        }
        for (start, power) in &self.k_poch_denom {
            write!(f, "/poch({},k)", start)?;
            if *power > 1 {
                write!(f, "^{}", power)?;
            }
        }
        if !self.geo_base.is_one() {
            write!(f, "*({})^k", self.geo_base)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poch_offset_ratio_basic() {
        // (a+1)_n / (a)_n = (a+n)/a with a = 1+k
        let a = crate::poly::parse_poly("1+k").unwrap();
        let r = poch_offset_ratio(&a, 1, Var::N);
        let expected = crate::poly::parse_ratfunc("(1+k+n)/(1+k)").unwrap();
        assert_eq!(r, expected);
        // negative offset: (a-1)_n/(a)_n = (a-1)/(a+n-1)
        let r = poch_offset_ratio(&a, -1, Var::N);
        let expected = crate::poly::parse_ratfunc("k/(k+n)").unwrap();
        assert_eq!(r, expected);
    }

    #[test]
    fn rhs_shape_ratio() {
        // (1/3)_k (1)_k / ((13/24)_k (19/24)_k) * (27/4)^k
        let shape = RhsShape {
            k_poch_numer: vec![(Rational::new(1, 3), 1), (Rational::one(), 1)],
            k_poch_denom: vec![(Rational::new(13, 24), 1), (Rational::new(19, 24), 1)],
            geo_base: Scalar::Rat(Rational::new(27, 4)),
        };
        let r = shape.shift_ratio(1);
        let expected =
            crate::poly::parse_ratfunc("27/4*(1/3+k)*(1+k)/((13/24+k)*(19/24+k))").unwrap();
        assert_eq!(r, expected);
    }
}
