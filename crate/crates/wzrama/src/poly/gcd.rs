//! Exact division, pseudo-division, contents, and gcds over the scalar
//! field, using a fraction-free subresultant remainder sequence for the
//! univariate steps to keep coefficient growth in check.

use crate::poly::{MultiPoly, Var, ALL_VARS};

impl MultiPoly {
    /// Divide by the leading scalar under the global lexicographic order,
    /// making the polynomial "monic" in a canonical, deterministic way.
    pub fn monic_lex(&self) -> MultiPoly {
        match self.leading_scalar() {
            None => MultiPoly::zero(),
            Some(lc) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.div_scalar(&lc.clone())
                }
            }
        }
    }

    /// First variable (in lex order) occurring in this polynomial.
    pub fn main_var(&self) -> Option<Var> {
        ALL_VARS.into_iter().find(|v| self.uses_var(*v))
    }

    /// Exact division; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(MultiPoly::zero());
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.div_scalar(&c));
        }
        let v = divisor.main_var().unwrap();
        let dd = divisor.degree(v).unwrap();
        let d_coeffs = divisor.as_univariate(v);
        let d_lead = &d_coeffs[dd];

        let mut rem = self.clone();
        let mut quot_coeffs: Vec<MultiPoly> = Vec::new();
        while !rem.is_zero() {
            let rd = rem.degree(v).unwrap();
            if rd < dd {
                return None;
            }
            let r_lead = rem.coeff_of(v, rd);
            let q = r_lead.div_exact(d_lead)?;
            let shift_deg = rd - dd;
            while quot_coeffs.len() <= shift_deg {
                quot_coeffs.push(MultiPoly::zero());
            }
            quot_coeffs[shift_deg] = &quot_coeffs[shift_deg] + &q;
            let x_pow = MultiPoly::var(v).pow(shift_deg);
            rem = &rem - &q.mul(&x_pow).mul(divisor);
            if rem.degree(v).is_some_and(|d| d >= rd) {
                return None; // no progress; not exactly divisible
            }
        }
        Some(MultiPoly::from_univariate(v, &quot_coeffs))
    }

    /// Pseudo-division in `v`: computes `(q, r)` with
    /// `lc(d)^(deg p - deg d + 1) * p = q*d + r` and `deg_v r < deg_v d`.
    pub fn pseudo_div_rem(&self, divisor: &MultiPoly, v: Var) -> (MultiPoly, MultiPoly) {
        let dd = divisor.degree(v).expect("pseudo-division by zero");
        let pd = match self.degree(v) {
            None => return (MultiPoly::zero(), MultiPoly::zero()),
            Some(pd) => pd,
        };
        if pd < dd {
            return (MultiPoly::zero(), self.clone());
        }
        let lc_d = divisor.coeff_of(v, dd);
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero();
        let mut steps = 0usize;
        while let Some(rd) = rem.degree(v) {
            if rd < dd {
                break;
            }
            let lc_r = rem.coeff_of(v, rd);
            let x_pow = MultiPoly::var(v).pow(rd - dd);
            quot = &quot.mul(&lc_d) + &lc_r.mul(&x_pow);
            rem = &rem.mul(&lc_d) - &lc_r.mul(&x_pow).mul(divisor);
            steps += 1;
        }
        // Pad the multiplier so the identity uses exactly pd - dd + 1 factors.
        let total = pd - dd + 1;
        if steps < total {
            let extra = lc_d.pow(total - steps);
            quot = quot.mul(&extra);
            rem = rem.mul(&extra);
        }
        (quot, rem)
    }

    /// Content with respect to `v`: gcd of the coefficients, a polynomial
    /// in the remaining variables (lex-monic).
    pub fn content(&self, v: Var) -> MultiPoly {
        let coeffs = self.as_univariate(v);
        let mut g = MultiPoly::zero();
        for c in &coeffs {
            if !c.is_zero() {
                g = mv_gcd(&g, c);
                if g.is_one() {
                    break;
                }
            }
        }
        g
    }

    /// `self / content(self, v)`, lex-monic normalized.
    pub fn primitive_part(&self, v: Var) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        let cont = self.content(v);
        self.div_exact(&cont)
            .expect("content must divide")
            .monic_lex()
    }
}

/// Full multivariate gcd over the scalar field, normalized lex-monic.
/// gcd(0, 0) = 0 by convention.
pub fn mv_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.monic_lex();
    }
    if q.is_zero() {
        return p.monic_lex();
    }
    let v = match p.main_var().into_iter().chain(q.main_var()).min() {
        None => return MultiPoly::one(), // both nonzero constants
        Some(v) => v,
    };
    if !p.uses_var(v) {
        return mv_gcd(p, &q.content(v));
    }
    if !q.uses_var(v) {
        return mv_gcd(&p.content(v), q);
    }
    // Single shared variable: plain Euclid over the scalar field beats
    // pseudo-division bookkeeping.
    if p.main_var() == Some(v) && q.main_var() == Some(v) && only_var(p, v) && only_var(q, v) {
        return univariate_field_gcd(p, q, v);
    }
    // Most normalization gcds are trivial; certify coprimality (in v) by a
    // degree-preserving specialization before paying for the PRS.
    if coprime_in_var_by_specialization(p, q, v) {
        let cont_p = p.content(v);
        if cont_p.is_one() {
            return MultiPoly::one();
        }
        let cont_q = q.content(v);
        return mv_gcd(&cont_p, &cont_q);
    }

    let cont_p = p.content(v);
    let cont_q = q.content(v);
    let pp_p = p.div_exact(&cont_p).unwrap();
    let pp_q = q.div_exact(&cont_q).unwrap();
    let g_cont = mv_gcd(&cont_p, &cont_q);
    let g_pp = subresultant_gcd(&pp_p, &pp_q, v);
    g_cont.mul(&g_pp).monic_lex()
}

/// True only when `p` and `q` provably share no factor of positive degree
/// in `v`: specialize all other variables at a degree-preserving sample
/// point and check the univariate gcd. A common factor with positive
/// `v`-degree keeps positive degree under any specialization that
/// preserves the leading coefficients, so a constant specialized gcd is a
/// certificate. `false` just means "unknown".
fn coprime_in_var_by_specialization(p: &MultiPoly, q: &MultiPoly, v: Var) -> bool {
    use crate::exact::{Rational, Scalar};
    let others: Vec<Var> = ALL_VARS
        .into_iter()
        .filter(|w| *w != v && (p.uses_var(*w) || q.uses_var(*w)))
        .collect();
    if others.is_empty() {
        return false; // univariate case is handled directly
    }
    let samples: [&[(i64, i64)]; 3] = [
        &[(19, 7), (13, 5), (29, 11), (43, 13)],
        &[(-23, 9), (61, 8), (17, 12), (-31, 7)],
        &[(97, 10), (-19, 6), (53, 15), (71, 4)],
    ];
    'sample: for sample in samples {
        let mut ps = p.clone();
        let mut qs = q.clone();
        for (i, w) in others.iter().enumerate() {
            let (num, den) = sample[i % sample.len()];
            let value = Scalar::Rat(Rational::new(num, den));
            ps = ps.subst_scalar(*w, &value);
            qs = qs.subst_scalar(*w, &value);
        }
        if ps.degree(v) != p.degree(v) || qs.degree(v) != q.degree(v) {
            continue 'sample;
        }
        let g = univariate_field_gcd(&ps, &qs, v);
        if g.degree(v).unwrap_or(0) == 0 {
            return true;
        }
        return false; // plausible common factor; run the real PRS
    }
    false
}

fn only_var(p: &MultiPoly, v: Var) -> bool {
    ALL_VARS.into_iter().all(|w| w == v || !p.uses_var(w))
}

fn univariate_field_gcd(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let to_dense = |p: &MultiPoly| -> Vec<crate::exact::Scalar> {
        p.as_univariate(v)
            .into_iter()
            .map(|c| c.as_constant().unwrap())
            .collect()
    };
    let mut a = to_dense(p);
    let mut b = to_dense(q);
    let trim = |c: &mut Vec<crate::exact::Scalar>| {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b over the field
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let factor = &*a.last().unwrap() / &lead;
            let offset = a.len() - b.len();
            if !factor.is_zero() {
                for (i, bc) in b.iter().enumerate() {
                    let t = &factor * bc;
                    a[offset + i] = &a[offset + i] - &t;
                }
            }
            a.pop();
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    let coeffs: Vec<MultiPoly> = a.into_iter().map(MultiPoly::constant).collect();
    MultiPoly::from_univariate(v, &coeffs).monic_lex()
}

/// Gcd of two `v`-primitive polynomials via the subresultant PRS.
fn subresultant_gcd(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let (mut a, mut b) = if p.degree(v) >= q.degree(v) {
        (p.clone(), q.clone())
    } else {
        (q.clone(), p.clone())
    };
    let mut g = MultiPoly::one();
    let mut h = MultiPoly::one();
    loop {
        let da = a.degree(v).unwrap();
        let db = match b.degree(v) {
            None => return a.primitive_part(v),
            Some(db) => db,
        };
        if db == 0 {
            return MultiPoly::one();
        }
        let delta = da - db;
        let (_, r) = a.pseudo_div_rem(&b, v);
        if r.is_zero() {
            return b.primitive_part(v);
        }
        // b_next = r / (g * h^delta), exact by the subresultant theory.
        let divisor = g.mul(&h.pow(delta));
        let r = r.div_exact(&divisor).expect("subresultant division");
        a = b;
        g = a.coeff_of(v, a.degree(v).unwrap());
        h = if delta == 0 {
            h
        } else {
            // h = g^delta / h^(delta-1)
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("subresultant h update")
        };
        b = r;
    }
}

/// Gcd of `p` and `q` viewed univariately in `v` over the rational-function
/// field of the remaining variables: `v`-primitive, lex-monic. This is the
/// gcd notion the summation algorithms use.
pub fn poly_gcd(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    let g = mv_gcd(p, q);
    if g.is_zero() {
        return g;
    }
    g.primitive_part(v)
}

/// Least common multiple up to a unit, lex-monic.
pub fn mv_lcm(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero();
    }
    let g = mv_gcd(p, q);
    p.mul(q).div_exact(&g).expect("gcd divides product").monic_lex()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, rat_const, Var};

    #[test]
    fn exact_division() {
        let p = int_poly(Var::N, &[-1, 0, 1]); // n^2-1
        let d = int_poly(Var::N, &[-1, 1]); // n-1
        assert_eq!(p.div_exact(&d).unwrap(), int_poly(Var::N, &[1, 1]));
        let nd = int_poly(Var::N, &[1, 1, 1]);
        assert!(nd.div_exact(&d).is_none());
    }

    #[test]
    fn gcd_examples() {
        // gcd(n^2-1, n-1) = n-1
        let g = poly_gcd(
            &int_poly(Var::N, &[-1, 0, 1]),
            &int_poly(Var::N, &[-1, 1]),
            Var::N,
        );
        assert_eq!(g, int_poly(Var::N, &[-1, 1]));

        // gcd(n+2k, n+2k+1) = 1
        let nk = &MultiPoly::var(Var::N) + &int_poly(Var::K, &[0, 2]);
        let nk1 = &nk + &MultiPoly::one();
        assert!(poly_gcd(&nk, &nk1, Var::N).is_one());

        // gcd((n+k)(n-3), (n+k)(n+5)) = n+k
        let npk = &MultiPoly::var(Var::N) + &MultiPoly::var(Var::K);
        let p = npk.mul(&int_poly(Var::N, &[-3, 1]));
        let q = npk.mul(&int_poly(Var::N, &[5, 1]));
        let g = poly_gcd(&p, &q, Var::N);
        assert_eq!(g, npk);
        // exact-division check both ways
        assert!(p.div_exact(&g).is_some());
        assert!(q.div_exact(&g).is_some());
    }

    #[test]
    fn gcd_of_zero() {
        let z = MultiPoly::zero();
        assert!(mv_gcd(&z, &z).is_zero());
        let p = int_poly(Var::N, &[2, 4]);
        let mut monic = int_poly(Var::N, &[0, 1]);
        monic = &monic + &rat_const(1, 2);
        assert_eq!(mv_gcd(&z, &p), monic);
    }

    #[test]
    fn pseudo_division_identity() {
        let p = int_poly(Var::N, &[1, 3, 0, 2]);
        let d = int_poly(Var::N, &[-1, 0, 3]);
        let (q, r) = p.pseudo_div_rem(&d, Var::N);
        // lc(d)^(3-2+1) * p = q*d + r
        let lhs = p.mul(&int_poly(Var::N, &[9]));
        let rhs = &q.mul(&d) + &r;
        assert_eq!(lhs, rhs);
        assert!(r.degree(Var::N).unwrap_or(0) < 2);
    }

    #[test]
    fn content_and_primitive() {
        // (2k)(n) + (2k): content in n is k (monic), pp = ... times 2
        let k2 = int_poly(Var::K, &[0, 2]);
        let p = &k2.mul(&MultiPoly::var(Var::N)) + &k2;
        let cont = p.content(Var::N);
        assert_eq!(cont, MultiPoly::var(Var::K));
        let pp = p.primitive_part(Var::N);
        assert_eq!(pp, int_poly(Var::N, &[1, 1]));
    }
}
