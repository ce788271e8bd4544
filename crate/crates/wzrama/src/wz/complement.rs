//! The complementary-weight solver: given a summand `A(n, k)`, weight it by
//! `n + b k + c` with symbolic `b, c`, telescope at order 2 over the
//! parameter field, and solve for the `(b, c)` that kill the `K^2`
//! coefficient, degenerating the telescoper to order 1.
//!
//! Solutions are sought in Q and, when a working radicand is supplied, in
//! Q(sqrt(d)); anything of higher degree is reported with the elimination
//! polynomial attached rather than silently dropped.

use crate::exact::{Rational, Scalar};
use crate::hyperterm::HyperTerm;
use crate::poly::gcd::mv_gcd;
use crate::poly::roots::roots_in_field;
use crate::poly::{resultant, MultiPoly, RatFunc, Var};
use crate::wz::zeilberger::zeilberger;
use crate::wz::WzError;

/// All rational and quadratic-surd pairs `(b, c)` such that
/// `A(n,k) * (n + b k + c)` admits an order-1 telescoper. Every returned
/// pair has been re-certified at order 1.
pub fn find_complement(
    term: &HyperTerm,
    radicand: Option<u64>,
) -> Result<Vec<(Scalar, Scalar)>, WzError> {
    let lambda = term.k_denominator_lcm();
    let term = term.k_rescaled(lambda);
    let d = radicand.or_else(|| term.radicand());

    // B = A * (n + b k + c) in the rescaled variable.
    let weight = &(&MultiPoly::var(Var::N)
        + &MultiPoly::var(Var::B).mul(&MultiPoly::var(Var::K)))
        + &MultiPoly::var(Var::C);
    let mut weighted = term.clone();
    weighted.prefactor = weighted.prefactor.mul(&RatFunc::from_poly(weight.clone()));

    let tel = zeilberger(&weighted, 2)?;
    if tel.order < 2 {
        // Already order 1 for generic (b, c); the complement condition is
        // vacuous, which no catalog term triggers.
        return Err(WzError::SystemInconsistent);
    }
    let sigma = tel.sigma_primitive();
    let sigma2 = sigma.last().expect("order-2 operator").clone();

    // Equations: every k-coefficient of sigma_2(k; b, c) vanishes.
    let mut eqs: Vec<MultiPoly> = sigma2
        .as_univariate(Var::K)
        .into_iter()
        .filter(|e| !e.is_zero())
        .collect();
    eqs.sort_by_key(|e| e.total_degree().unwrap_or(0));
    if eqs.is_empty() {
        return Err(WzError::SystemInconsistent);
    }
    if eqs.len() == 1 {
        return Err(WzError::SystemInconsistent);
    }

    // Eliminate b: collect univariate-in-c consequences.
    let anchor = eqs
        .iter()
        .find(|e| e.degree(Var::B).unwrap_or(0) >= 1)
        .cloned();
    let mut c_polys: Vec<MultiPoly> = Vec::new();
    for e in &eqs {
        if e.degree(Var::B).unwrap_or(0) == 0 {
            c_polys.push(e.clone());
            continue;
        }
        let anchor = anchor.as_ref().unwrap();
        if std::ptr::eq(e, anchor) {
            continue;
        }
        if e == anchor {
            continue;
        }
        let r = resultant(anchor, e, Var::B);
        if r.is_zero() {
            let g = mv_gcd(anchor, e);
            let a2 = anchor.div_exact(&g).unwrap();
            let e2 = e.div_exact(&g).unwrap();
            if a2.degree(Var::B).unwrap_or(0) >= 1 || e2.degree(Var::B).unwrap_or(0) >= 1 {
                let r2 = resultant(&a2, &e2, Var::B);
                if !r2.is_zero() && !r2.is_constant() {
                    c_polys.push(r2);
                }
            }
            if g.degree(Var::B).unwrap_or(0) == 0 && !g.is_constant() {
                c_polys.push(g);
            }
            continue;
        }
        c_polys.push(r);
    }
    let mut g_c = MultiPoly::zero();
    for p in &c_polys {
        g_c = mv_gcd(&g_c, p);
    }
    if g_c.is_zero() {
        return Err(WzError::SystemInconsistent);
    }
    if g_c.as_constant().is_some() {
        return Err(WzError::SystemInconsistent);
    }
    if g_c.uses_var(Var::B) || g_c.uses_var(Var::N) || g_c.uses_var(Var::K) {
        return Err(WzError::SystemInconsistent);
    }

    let c_roots = roots_in_field(&g_c, Var::C, d)?;
    if c_roots.is_empty() {
        return Err(WzError::NoSolutionInSupportedFields(g_c.to_string()));
    }

    let mut found: Vec<(Scalar, Scalar)> = Vec::new();
    for c0 in c_roots {
        // Substitute and intersect the b-roots of every equation.
        let mut g_b = MultiPoly::zero();
        for e in &eqs {
            let at = e.subst_scalar(Var::C, &c0);
            g_b = mv_gcd(&g_b, &at);
        }
        if g_b.is_zero() || g_b.as_constant().is_some() {
            continue;
        }
        let b_roots = roots_in_field(&g_b, Var::B, d)?;
        'cand: for b0 in b_roots {
            for e in &eqs {
                let v = e.eval(&[(Var::B, b0.clone()), (Var::C, c0.clone())]);
                if !v.is_zero() {
                    continue 'cand;
                }
            }
            found.push((b0, c0.clone()));
        }
    }
    if found.is_empty() {
        return Err(WzError::NoSolutionInSupportedFields(g_c.to_string()));
    }

    // Soundness: each candidate must actually degenerate the telescoper.
    let mut verified = Vec::new();
    for (b0, c0) in found {
        let w = weight
            .subst_scalar(Var::B, &b0)
            .subst_scalar(Var::C, &c0);
        let mut candidate_term = term.clone();
        candidate_term.prefactor = candidate_term.prefactor.mul(&RatFunc::from_poly(w));
        match zeilberger(&candidate_term, 2) {
            Ok(t) if t.order == 1 => {
                // Map b back through the k-rescale.
                let b_out = if lambda == 1 {
                    b0
                } else {
                    &b0 * &Scalar::Rat(Rational::new(1, lambda as i64))
                };
                verified.push((b_out, c0));
            }
            _ => {}
        }
    }
    if verified.is_empty() {
        return Err(WzError::SystemInconsistent);
    }

    // Rational pairs first, then surds, lexicographic by rendering.
    verified.sort_by_key(|(b, c)| {
        (
            !b.is_rational() || !c.is_rational(),
            b.to_string(),
            c.to_string(),
        )
    });
    verified.dedup();
    Ok(verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperterm::parse_term;

    #[test]
    fn eq1_complement_is_rational() {
        // weight 12n + 24k + 1 = 12(n + 2k + 1/12): expect (b, c) = (2, 1/12)
        let t = parse_term(
            "poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n",
        )
        .unwrap();
        let sols = find_complement(&t, None).unwrap();
        let b = Scalar::from_int(2);
        let c = Scalar::Rat(Rational::new(1, 12));
        assert!(
            sols.contains(&(b, c)),
            "missing (2, 1/12) in {:?}",
            sols
        );
    }
}
