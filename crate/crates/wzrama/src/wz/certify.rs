//! WZ-style certification of a catalog identity: divide the summand (and
//! linear weight) by the closed-form right-hand shape, find the order-1
//! telescoping relation `F(n,k+1) - F(n,k) = G(n+1,k) - G(n,k)` with
//! `G = R * F` via Gosper in `n`, and verify it as an exact
//! rational-function identity.

use crate::exact::{Rational, Scalar};
use crate::hyperterm::{HyperTerm, RhsShape, TermError};
use crate::poly::{MultiPoly, RatFunc, Var};
use crate::wz::gosper::gosper;
use crate::wz::WzError;

/// What gets certified: summand, optional linear weight, right-hand shape
/// (constant omitted).
#[derive(Clone)]
pub struct CertInput {
    pub term: HyperTerm,
    pub weight: Option<MultiPoly>,
    pub rhs: RhsShape,
}

/// A verified WZ certificate.
#[derive(Clone, Debug)]
pub struct WzProof {
    /// `k`-rescale applied before telescoping (1 = verbatim variable).
    pub lambda: u64,
    /// Certificate `R(n, k)` with `G = R * F`.
    pub certificate: RatFunc,
    /// Operator coefficients: always `[-1, 1]`, i.e. the operator `K - 1`.
    pub sigma: Vec<RatFunc>,
    /// `G(0, k) = 0` established symbolically (certificate vanishes at
    /// `n = 0`, or the weight kills the first column).
    pub boundary_symbolic_zero: bool,
    /// Forward shift quotient `F(n+1,k)/F(n,k)`, kept for numeric boundary
    /// and tail evidence.
    pub rho_n: RatFunc,
    /// `k`-shift quotient `F(n,k+1)/F(n,k)`.
    pub rho_k: RatFunc,
}

/// Certify one identity; purely symbolic. Numeric evidence (tail decay,
/// constant residuals) is layered on top by the verification harness.
pub fn certify(input: &CertInput) -> Result<WzProof, WzError> {
    let lambda = input.term.k_denominator_lcm();
    let term = input.term.k_rescaled(lambda);
    let weight = input.weight.as_ref().map(|w| {
        let scaled_k = MultiPoly::var(Var::K)
            .mul_scalar(&Scalar::Rat(Rational::from_int(lambda as i64)));
        w.subst(Var::K, &scaled_k)
    });

    let mut rho_n = term.shift_quotient(Var::N)?;
    let mut rho_k = term.shift_quotient(Var::K)?;
    if let Some(w) = &weight {
        if w.is_zero() {
            return Err(WzError::Term(TermError::UnsupportedEvaluation(
                "zero weight".into(),
            )));
        }
        rho_n = rho_n.mul(&RatFunc::new(w.shift(Var::N, 1), w.clone()));
        rho_k = rho_k.mul(&RatFunc::new(w.shift(Var::K, 1), w.clone()));
    }
    rho_k = rho_k.div(&input.rhs.shift_ratio(lambda));

    let s = rho_k.sub(&RatFunc::one());
    let certificate = if s.is_zero() {
        // F is k-free; G = 0 telescopes trivially.
        RatFunc::zero()
    } else {
        let gosper_ratio = rho_n.mul(&s.shift(Var::N, 1)).div(&s);
        let base = gosper(&gosper_ratio)?;
        base.ratio.mul(&s)
    };

    // The headline invariant: rho_k - 1 - (R(n+1,k) rho_n - R(n,k)) = 0.
    let residual = s
        .sub(&certificate.shift(Var::N, 1).mul(&rho_n))
        .add(&certificate);
    if !residual.is_zero() {
        return Err(WzError::CertificateFails);
    }

    let boundary_symbolic_zero = match certificate.subst_scalar(Var::N, &Scalar::zero()) {
        Ok(at_zero) => at_zero.is_zero(),
        Err(_) => false,
    } || weight
        .as_ref()
        .is_some_and(|w| w.subst_scalar(Var::N, &Scalar::zero()).is_zero());

    Ok(WzProof {
        lambda,
        certificate,
        sigma: vec![RatFunc::from_int(-1), RatFunc::one()],
        boundary_symbolic_zero,
        rho_n,
        rho_k,
    })
}

/// Exact value of `sum_n term(n, k) * weight(n, k)` when the sum
/// terminates at `k` (some numerator Pochhammer argument is a non-positive
/// integer there). `None` when the sum does not terminate.
pub fn terminating_sum(
    term: &HyperTerm,
    weight: Option<&MultiPoly>,
    k: &Rational,
) -> Option<Result<Scalar, TermError>> {
    let mut stop: Option<u64> = None;
    for p in &term.numer_poch {
        if p.idx != Var::N {
            continue;
        }
        let start = p.arg.value_at(&Rational::zero(), k);
        if let Some(r) = start.as_rational() {
            if let Some(m) = (-r).to_integer() {
                use num_traits::{Signed, ToPrimitive};
                if !m.is_negative() {
                    if let Some(m) = m.to_u64() {
                        let candidate = m + 1;
                        stop = Some(stop.map_or(candidate, |s| s.min(candidate)));
                    }
                }
            }
        }
    }
    let stop = stop?;
    let mut total = Scalar::zero();
    for n in 0..stop {
        let t = match term.eval_exact(n, k) {
            Ok(t) => t,
            Err(e) => return Some(Err(e)),
        };
        let w = match weight {
            None => Scalar::one(),
            Some(w) => w.eval(&[
                (Var::N, Scalar::from_int(n as i64)),
                (Var::K, Scalar::Rat(k.clone())),
            ]),
        };
        total = &total + &(&t * &w);
    }
    Some(Ok(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperterm::{parse_term, rhs_shape_from_term};
    use crate::poly::parse_poly;

    fn shape(poch: &str, geo: &str) -> RhsShape {
        let t = parse_term(poch).unwrap();
        rhs_shape_from_term(&t, crate::exact::parse_scalar(geo).unwrap()).unwrap()
    }

    #[test]
    fn certify_simple_pair() {
        // eq7-style input: small degrees, rational field.
        let term = parse_term(
            "poch(1/3-k,n)*poch(2/3-k,n)/(poch(1+k,n)*poch(1,n))*(-1/8)^n",
        )
        .unwrap();
        let input = CertInput {
            term,
            weight: None,
            rhs: shape("poch(1,k)/poch(5/6,k)", "27/32"),
        };
        let proof = certify(&input).unwrap();
        assert_eq!(proof.lambda, 1);
        assert!(proof.boundary_symbolic_zero);
        assert!(!proof.certificate.is_zero());
    }

    #[test]
    fn certify_weighted_pair() {
        let term = parse_term(
            "poch(1/3-k,n)*poch(2/3-k,n)/(poch(1+k,n)*poch(1,n))*(-1/8)^n",
        )
        .unwrap();
        let input = CertInput {
            term,
            weight: Some(parse_poly("9*n+3*k+1").unwrap()),
            rhs: shape("poch(1,k)/poch(1/6,k)", "27/32"),
        };
        let proof = certify(&input).unwrap();
        assert!(proof.boundary_symbolic_zero);
    }

    #[test]
    fn corrupted_shape_fails() {
        let term = parse_term(
            "poch(1/3-k,n)*poch(2/3-k,n)/(poch(1+k,n)*poch(1,n))*(-1/8)^n",
        )
        .unwrap();
        let input = CertInput {
            term,
            weight: None,
            rhs: shape("poch(1,k)/poch(13/24,k)", "27/32"),
        };
        assert!(certify(&input).is_err());
    }

    #[test]
    fn terminating_collapse() {
        // eq1 summand at k = -1/6: (1/3 + 2k) = 0, single surviving term.
        let term = parse_term(
            "poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n",
        )
        .unwrap();
        let sum = terminating_sum(&term, None, &Rational::new(-1, 6))
            .unwrap()
            .unwrap();
        assert_eq!(sum, Scalar::one());
        // with the eq2 weight: 24k + 1 = -3 at n = 0
        let w = parse_poly("12*n+24*k+1").unwrap();
        let sum = terminating_sum(&term, Some(&w), &Rational::new(-1, 6))
            .unwrap()
            .unwrap();
        assert_eq!(sum, Scalar::from_int(-3));
        // non-terminating at k = 0
        assert!(terminating_sum(&term, None, &Rational::zero()).is_none());
    }
}
