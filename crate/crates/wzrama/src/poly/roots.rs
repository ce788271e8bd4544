//! Exact univariate root finding: integer and rational roots via Sturm
//! isolation, and roots lying in a quadratic field Q(sqrt(d)) via
//! elimination on the rational and surd components.
//!
//! Nothing here needs factorization; isolation plus exact verification is
//! enough for the solution degrees this crate supports (<= 2 over Q).

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{Rational, Scalar};
use crate::poly::gcd::mv_gcd;
use crate::poly::{resultant, MultiPoly, PolyError, Var};

/// Dense univariate polynomial over Q, used for Sturm sequences.
#[derive(Clone, Debug, PartialEq)]
struct UniRat {
    c: Vec<Rational>, // c[i] is the coefficient of x^i; trailing entry nonzero
}

impl UniRat {
    fn normalize(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UniRat { c }
    }

    fn from_multipoly(p: &MultiPoly, v: Var) -> Option<Self> {
        let coeffs = p.as_univariate(v);
        let mut c = Vec::with_capacity(coeffs.len());
        for q in coeffs {
            match q.as_constant()?.as_rational() {
                Some(r) => c.push(r.clone()),
                None => return None,
            }
        }
        Some(UniRat::normalize(c))
    }

    fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for coeff in self.c.iter().rev() {
            acc = &(&acc * x) + coeff;
        }
        acc
    }

    fn eval_int(&self, x: &BigInt) -> Rational {
        self.eval(&Rational::from_int(x.clone()))
    }

    fn derivative(&self) -> UniRat {
        if self.c.len() <= 1 {
            return UniRat { c: vec![] };
        }
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, x)| x * &Rational::from_int(i as i64))
            .collect();
        UniRat::normalize(c)
    }

    /// Remainder of polynomial division over Q.
    fn rem(&self, d: &UniRat) -> UniRat {
        assert!(!d.is_zero());
        let mut r = self.c.clone();
        let dd = d.degree();
        let lead = d.c[dd].clone();
        while r.len() > dd {
            let rd = r.len() - 1;
            let factor = &r[rd] / &lead;
            if !factor.is_zero() {
                for i in 0..=dd {
                    let idx = rd - dd + i;
                    r[idx] = &r[idx] - &(&factor * &d.c[i]);
                }
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UniRat { c: r }
    }

    fn gcd(&self, other: &UniRat) -> UniRat {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a
    }

    fn div_exact(&self, d: &UniRat) -> UniRat {
        // Used only when divisibility is known (squarefree part).
        let mut r = self.c.clone();
        let dd = d.degree();
        let lead = d.c[dd].clone();
        let mut q = vec![Rational::zero(); self.c.len().saturating_sub(dd)];
        while r.len() > dd {
            let rd = r.len() - 1;
            let factor = &r[rd] / &lead;
            q[rd - dd] = factor.clone();
            for i in 0..=dd {
                let idx = rd - dd + i;
                r[idx] = &r[idx] - &(&factor * &d.c[i]);
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        UniRat::normalize(q)
    }

    fn squarefree_part(&self) -> UniRat {
        let d = self.derivative();
        if d.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&d);
        if g.degree() == 0 {
            self.clone()
        } else {
            self.div_exact(&g)
        }
    }
}

/// Sturm chain of a squarefree polynomial.
fn sturm_chain(p: &UniRat) -> Vec<UniRat> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_zero() {
            chain.pop();
            break;
        }
        let prev = &chain[chain.len() - 2];
        let mut r = prev.rem(last);
        for c in &mut r.c {
            *c = -c.clone();
        }
        if r.is_zero() {
            break;
        }
        chain.push(r);
    }
    chain
}

fn sign_variations(chain: &[UniRat], x: &Rational) -> usize {
    let mut count = 0;
    let mut prev: i8 = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        };
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Cauchy root bound: all real roots lie in `[-M, M]`.
fn cauchy_bound(p: &UniRat) -> Rational {
    let d = p.degree();
    let lead = p.c[d].abs();
    let mut m = Rational::zero();
    for c in &p.c[..d] {
        let q = &c.abs() / &lead;
        if m.cmp_value(&q) == std::cmp::Ordering::Less {
            m = q;
        }
    }
    m + Rational::one()
}

/// All integer roots of `p` (viewed univariately in `v` with rational
/// coefficients) inside `[lo_bound, +inf)`; pass `None` for all integers.
fn integer_roots_bounded(p: &MultiPoly, v: Var, lo_bound: Option<BigInt>) -> Vec<BigInt> {
    let uni = UniRat::from_multipoly(p, v)
        .expect("integer root search requires rational coefficients");
    assert!(!uni.is_zero(), "integer roots of the zero polynomial");
    let mut roots = Vec::new();

    // Strip x^m: zero is a root iff m >= 1.
    let mut c = uni.c.clone();
    let mut low_zero = 0usize;
    while c.first().is_some_and(|x| x.is_zero()) {
        c.remove(0);
        low_zero += 1;
    }
    if low_zero > 0 && lo_bound.as_ref().is_none_or(|lb| lb <= &BigInt::zero()) {
        roots.push(BigInt::zero());
    }
    let stripped = UniRat::normalize(c);
    if stripped.degree() == 0 {
        roots.sort();
        return roots;
    }

    let sf = stripped.squarefree_part();
    let chain = sturm_chain(&sf);
    let bound = cauchy_bound(&sf);
    let hi: BigInt = bound.floor() + BigInt::one();
    let lo: BigInt = match &lo_bound {
        Some(lb) => lb - BigInt::one(),
        None => -&hi,
    };
    if lo >= hi {
        roots.sort();
        return roots;
    }

    // Bisect on integer endpoints only, so Sturm evaluations never see
    // denominators; a width-1 interval (a, a+1] holds one candidate.
    let var_at = |x: &BigInt| sign_variations(&chain, &Rational::from_int(x.clone()));
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        if var_at(&a) == var_at(&b) {
            continue; // no roots in (a, b]
        }
        if &b - &a <= BigInt::one() {
            if stripped.eval_int(&b).is_zero() {
                roots.push(b);
            }
            continue;
        }
        let mid = (&a + &b) / BigInt::from(2);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    roots.sort();
    roots.dedup();
    roots
}

/// Non-negative integer roots of `p` in `v`.
pub fn nonneg_integer_roots(p: &MultiPoly, v: Var) -> Vec<BigInt> {
    integer_roots_bounded(p, v, Some(BigInt::zero()))
}

/// All integer roots of `p` in `v`.
pub fn integer_roots(p: &MultiPoly, v: Var) -> Vec<BigInt> {
    integer_roots_bounded(p, v, None)
}

/// All rational roots of `p` in `v` (rational coefficients required).
///
/// Uses the monic substitution `y = lc * x`, turning rational roots into
/// integer roots of a monic integer polynomial.
pub fn rational_roots(p: &MultiPoly, v: Var) -> Vec<Rational> {
    let uni = UniRat::from_multipoly(p, v)
        .expect("rational root search requires rational coefficients");
    assert!(!uni.is_zero(), "rational roots of the zero polynomial");
    if uni.degree() == 0 {
        return Vec::new();
    }
    // Clear denominators to integers.
    let mut denom_lcm = BigInt::one();
    for c in &uni.c {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let ints: Vec<BigInt> = uni
        .c
        .iter()
        .map(|c| {
            let scaled = c * &Rational::from_int(denom_lcm.clone());
            scaled.to_integer().unwrap()
        })
        .collect();
    let d = ints.len() - 1;
    let lead = ints[d].clone();
    // q(y) = lead^(d-1) p(y / lead): coefficients ints[i] * lead^(d-1-i).
    let mut monic_coeffs = Vec::with_capacity(d + 1);
    for (i, ci) in ints.iter().enumerate() {
        let e = (d - 1).saturating_sub(i); // for i = d this is 0 and c_d cancels to 1 below
        monic_coeffs.push(Rational::from_int(ci * lead.pow(e as u32)));
    }
    // For i = d the coefficient must be exactly 1 after the substitution.
    monic_coeffs[d] = Rational::one();
    let q = MultiPoly::from_univariate(
        v,
        &monic_coeffs
            .into_iter()
            .map(|c| MultiPoly::constant(Scalar::Rat(c)))
            .collect::<Vec<_>>(),
    );
    let mut out = Vec::new();
    for y in integer_roots(&q, v) {
        let x = Rational::new(y, lead.clone());
        // Exact confirmation on the original polynomial.
        if uni.eval(&x).is_zero() {
            out.push(x);
        }
    }
    out.sort_by(|a, b| a.cmp_value(b));
    out.dedup();
    out
}

/// Split a polynomial with possibly-surd coefficients into rational and
/// surd components: `p = rat + srd * sqrt(d)`.
fn split_components(p: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let mut rat = MultiPoly::zero();
    let mut srd = MultiPoly::zero();
    for (e, c) in p.terms() {
        let (a, b, _) = c.components();
        let mono = MultiPoly::from_exp(*e);
        if !a.is_zero() {
            rat = &rat + &mono.mul_scalar(&Scalar::Rat(a));
        }
        if !b.is_zero() {
            srd = &srd + &mono.mul_scalar(&Scalar::Rat(b));
        }
    }
    (rat, srd)
}

impl MultiPoly {
    fn from_exp(e: crate::poly::Exp) -> MultiPoly {
        let mut p = MultiPoly::one();
        for (i, &d) in e.iter().enumerate() {
            if d > 0 {
                p = p.mul(&MultiPoly::var(crate::poly::ALL_VARS[i]).pow(d as usize));
            }
        }
        p
    }
}

/// All roots of `p` (univariate in `v`) lying in Q or, when `d` is given,
/// in Q(sqrt(d)). Every returned value satisfies `p = 0` exactly; roots of
/// higher algebraic degree are simply not reported.
pub fn roots_in_field(p: &MultiPoly, v: Var, d: Option<u64>) -> Result<Vec<Scalar>, PolyError> {
    assert!(!p.is_zero(), "root search on the zero polynomial");
    let (rat_part, surd_part) = split_components(p);
    let mut out: Vec<Scalar> = Vec::new();

    // Rational roots: common roots of both components.
    let rational_carrier = if surd_part.is_zero() {
        rat_part.clone()
    } else if rat_part.is_zero() {
        surd_part.clone()
    } else {
        mv_gcd(&rat_part, &surd_part)
    };
    if !rational_carrier.is_constant() {
        for r in rational_roots(&rational_carrier, v) {
            let val = Scalar::Rat(r);
            if eval_poly_at(p, v, &val).is_zero() {
                out.push(val);
            }
        }
    }

    // Surd roots u + w*sqrt(d), w != 0.
    if let Some(d) = d {
        let (u_var, w_var) = scratch_vars(p, v)?;
        let du = MultiPoly::var(u_var);
        let dw = MultiPoly::var(w_var);
        let dconst = MultiPoly::from_int(d as i64);
        // Powers (u + w sqrt(d))^i = U_i + W_i sqrt(d).
        let deg = p.degree(v).unwrap();
        let mut upow = vec![MultiPoly::one()];
        let mut wpow = vec![MultiPoly::zero()];
        for i in 0..deg {
            let nu = &du.mul(&upow[i]) + &dconst.mul(&dw).mul(&wpow[i]);
            let nw = &dw.mul(&upow[i]) + &du.mul(&wpow[i]);
            upow.push(nu);
            wpow.push(nw);
        }
        let rat_c = rat_part.as_univariate(v);
        let srd_c = surd_part.as_univariate(v);
        let mut e_comp = MultiPoly::zero();
        let mut f_comp = MultiPoly::zero();
        for i in 0..=deg {
            let a = rat_c.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            let b = srd_c.get(i).cloned().unwrap_or_else(MultiPoly::zero);
            // (a + b sqrt(d)) (U_i + W_i sqrt(d))
            e_comp = &e_comp + &(&a.mul(&upow[i]) + &dconst.mul(&b).mul(&wpow[i]));
            f_comp = &f_comp + &(&a.mul(&wpow[i]) + &b.mul(&upow[i]));
        }
        if e_comp.is_zero() || f_comp.is_zero() {
            return Err(PolyError::DegenerateElimination);
        }
        let res_u = resultant(&e_comp, &f_comp, w_var);
        if res_u.is_zero() {
            // Components share a factor; outside the supported shape.
            return Err(PolyError::DegenerateElimination);
        }
        if !res_u.is_constant() {
            for u0 in rational_roots(&res_u, u_var) {
                let u0s = Scalar::Rat(u0);
                let e_at = e_comp.subst_scalar(u_var, &u0s);
                let f_at = f_comp.subst_scalar(u_var, &u0s);
                let carrier = if e_at.is_zero() {
                    f_at
                } else if f_at.is_zero() {
                    e_at
                } else {
                    mv_gcd(&e_at, &f_at)
                };
                if carrier.is_constant() {
                    continue;
                }
                for w0 in rational_roots(&carrier, w_var) {
                    if w0.is_zero() {
                        continue;
                    }
                    let (a, _, _) = u0s.components();
                    let candidate = Scalar::surd(a, w0, d);
                    if eval_poly_at(p, v, &candidate).is_zero() {
                        out.push(candidate);
                    }
                }
            }
        }
    }

    out.dedup();
    Ok(out)
}

fn eval_poly_at(p: &MultiPoly, v: Var, value: &Scalar) -> Scalar {
    p.subst_scalar(v, value)
        .as_constant()
        .expect("univariate evaluation")
}

/// Two variables unused by `p` (besides `v`) for the component expansion.
fn scratch_vars(p: &MultiPoly, v: Var) -> Result<(Var, Var), PolyError> {
    let free: Vec<Var> = crate::poly::ALL_VARS
        .into_iter()
        .filter(|w| *w != v && !p.uses_var(*w))
        .collect();
    if free.len() < 2 {
        return Err(PolyError::DegenerateElimination);
    }
    Ok((free[0], free[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_scalar;
    use crate::poly::{int_poly, Var};

    #[test]
    fn integer_roots_simple() {
        // (x-3)(x+4)(x-12)
        let p = int_poly(Var::J, &[-3, 1]).mul(&int_poly(Var::J, &[4, 1]).mul(&int_poly(
            Var::J,
            &[-12, 1],
        )));
        assert_eq!(
            integer_roots(&p, Var::J),
            vec![BigInt::from(-4), BigInt::from(3), BigInt::from(12)]
        );
        assert_eq!(
            nonneg_integer_roots(&p, Var::J),
            vec![BigInt::from(3), BigInt::from(12)]
        );
    }

    #[test]
    fn integer_roots_with_zero_and_multiplicity() {
        // x^2 (x - 5)^2 (x^2 + 1)
        let p = int_poly(Var::J, &[0, 0, 1])
            .mul(&int_poly(Var::J, &[-5, 1]).pow(2))
            .mul(&int_poly(Var::J, &[1, 0, 1]));
        assert_eq!(
            nonneg_integer_roots(&p, Var::J),
            vec![BigInt::from(0), BigInt::from(5)]
        );
    }

    #[test]
    fn rational_roots_simple() {
        // (2x - 1)(3x + 5)(x^2 + 7)
        let p = int_poly(Var::C, &[-1, 2])
            .mul(&int_poly(Var::C, &[5, 3]))
            .mul(&int_poly(Var::C, &[7, 0, 1]));
        let roots = rational_roots(&p, Var::C);
        assert_eq!(roots, vec![Rational::new(-5, 3), Rational::new(1, 2)]);
    }

    #[test]
    fn roots_in_quadratic_field() {
        // x^2 + x - 1 has roots (-1 +- sqrt(5))/2
        let p = int_poly(Var::B, &[-1, 1, 1]);
        let roots = roots_in_field(&p, Var::B, Some(5)).unwrap();
        let golden = parse_scalar("-1/2+1/2*sqrt(5)").unwrap();
        assert!(roots.contains(&golden));
        assert_eq!(roots.len(), 2);
        // and no rational roots
        assert!(roots.iter().all(|r| !r.is_rational()));
    }

    #[test]
    fn roots_with_surd_coefficients() {
        // (x - (9 - 4 sqrt 5)) * (x - 1/3): coefficients in Q(sqrt 5)
        let z = parse_scalar("9-4*sqrt(5)").unwrap();
        let x = MultiPoly::var(Var::C);
        let p = (&x - &MultiPoly::constant(z.clone())).mul(&(&x - &crate::poly::rat_const(1, 3)));
        let roots = roots_in_field(&p, Var::C, Some(5)).unwrap();
        assert!(roots.contains(&z));
        assert!(roots.contains(&Scalar::Rat(Rational::new(1, 3))));
    }

    #[test]
    fn well_separated_large_roots() {
        let q = int_poly(Var::J, &[-40, 1]).mul(&int_poly(Var::J, &[377, 1]));
        assert_eq!(
            integer_roots(&q, Var::J),
            vec![BigInt::from(-377), BigInt::from(40)]
        );
    }
}
