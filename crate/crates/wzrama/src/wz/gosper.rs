//! Gosper's algorithm for indefinite hypergeometric summation, working over
//! the rational-function field of any parameters present in the term ratio.
//!
//! Given `r(n) = t(n+1)/t(n)`, decompose
//! `r = (a(n)/b(n)) * (c(n+1)/c(n))` with `gcd(a(n), b(n+h)) = 1` for all
//! `h >= 0`, then solve `a(n) x(n+1) - b(n-1) x(n) = c(n)` for a polynomial
//! `x`. When a solution exists, `G = (b(n-1) x(n) / c(n)) * t(n)` satisfies
//! `G(n+1) - G(n) = t(n)`; otherwise no hypergeometric antidifference
//! exists, and the failure is definitive.

use crate::exact::Scalar;
use crate::poly::gcd::poly_gcd;
use crate::poly::{dispersion_set, MultiPoly, RatFunc, Var};
use crate::wz::linalg::solve_linear;
use crate::wz::WzError;

/// The certificate `R(n)` with `G = R * t`.
#[derive(Clone, Debug, PartialEq)]
pub struct GosperCert {
    pub ratio: RatFunc,
}

/// Gosper's `(a, b, c)` decomposition of a term ratio.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub a: MultiPoly,
    pub b: MultiPoly,
    pub c: MultiPoly,
}

pub fn decompose(r: &RatFunc, n: Var) -> Decomposition {
    let mut a = r.numerator().clone();
    let mut b = r.denominator().clone();
    let mut c = MultiPoly::one();
    for h in dispersion_set(&a, &b, n) {
        let s = poly_gcd(&a, &b.shift(n, h as i64), n);
        if s.degree(n).unwrap_or(0) == 0 {
            continue;
        }
        a = a.div_exact(&s).expect("dispersion gcd divides a");
        b = b
            .div_exact(&s.shift(n, -(h as i64)))
            .expect("dispersion gcd divides b");
        for i in 1..=h {
            c = c.mul(&s.shift(n, -(i as i64)));
        }
    }
    Decomposition { a, b, c }
}

/// Degree bound for polynomial solutions `x` of
/// `a(n) x(n+1) - b(n-1) x(n) = rhs(n)`, where `rhs` has degree
/// `rhs_deg` in `n`. `None` means no polynomial solution can exist.
pub fn degree_bound(a: &MultiPoly, b_shift: &MultiPoly, rhs_deg: usize, n: Var) -> Option<usize> {
    let u = a - b_shift; // "difference" part
    let w = a + b_shift; // "average" part
    let deg = |p: &MultiPoly| p.degree(n).map(|d| d as i64);
    let du = deg(&u);
    let dw = deg(&w);
    let d = match (du, dw) {
        (None, None) => return None, // a = b(n-1) = 0: degenerate
        (Some(du), dw) if dw.is_none_or(|dw| du >= dw) => rhs_deg as i64 - du,
        (_, Some(dw)) => {
            // deg u < deg w: cancellation of the top coefficient possible
            // exactly when x has degree l = -2 * coeff(u, dw-1) / lc(w).
            let generic = rhs_deg as i64 - dw + 1;
            let lc_w = w.coeff_of(n, dw as usize);
            let u_next = if dw >= 1 {
                u.coeff_of(n, (dw - 1) as usize)
            } else {
                MultiPoly::zero()
            };
            let special = u_next
                .mul_scalar(&Scalar::from_int(-2))
                .div_exact(&lc_w)
                .and_then(|q| q.as_constant())
                .and_then(|s| s.as_rational().cloned())
                .and_then(|r| r.to_i64())
                .filter(|&l| l >= 0);
            match special {
                Some(l) => generic.max(l),
                None => generic,
            }
        }
        _ => unreachable!(),
    };
    usize::try_from(d).ok()
}

/// Polynomials `P_i(n) = a(n) (n+1)^i - b(n-1) n^i` so that the Gosper
/// equation reads `sum_i x_i P_i = rhs`.
pub fn equation_columns(a: &MultiPoly, b_shift: &MultiPoly, d: usize, n: Var) -> Vec<MultiPoly> {
    let nv = MultiPoly::var(n);
    let np1 = &nv + &MultiPoly::one();
    (0..=d)
        .map(|i| &a.mul(&np1.pow(i)) - &b_shift.mul(&nv.pow(i)))
        .collect()
}

/// Split a polynomial identity in `n` into one linear equation per power
/// of `n`, with rational-function entries in the parameters.
pub fn rows_by_degree(cols: &[MultiPoly], rhs: &MultiPoly, n: Var) -> (Vec<Vec<RatFunc>>, Vec<RatFunc>) {
    let max_deg = cols
        .iter()
        .chain(std::iter::once(rhs))
        .filter_map(|p| p.degree(n))
        .max()
        .unwrap_or(0);
    let mut matrix = Vec::with_capacity(max_deg + 1);
    let mut rhs_vec = Vec::with_capacity(max_deg + 1);
    for deg in 0..=max_deg {
        let row: Vec<RatFunc> = cols
            .iter()
            .map(|p| RatFunc::from_poly(p.coeff_of(n, deg)))
            .collect();
        matrix.push(row);
        rhs_vec.push(RatFunc::from_poly(rhs.coeff_of(n, deg)));
    }
    (matrix, rhs_vec)
}

/// Run Gosper's algorithm on a term ratio `r(n) = t(n+1)/t(n)`.
pub fn gosper(r: &RatFunc) -> Result<GosperCert, WzError> {
    gosper_in(r, Var::N)
}

pub fn gosper_in(r: &RatFunc, n: Var) -> Result<GosperCert, WzError> {
    if r.is_zero() {
        return Err(WzError::NotGosperSummable);
    }
    let dec = decompose(r, n);
    let b_shift = dec.b.shift(n, -1);
    let rhs_deg = dec.c.degree(n).unwrap_or(0);
    let d = degree_bound(&dec.a, &b_shift, rhs_deg, n).ok_or(WzError::NotGosperSummable)?;
    let cols = equation_columns(&dec.a, &b_shift, d, n);
    let (matrix, rhs_vec) = rows_by_degree(&cols, &dec.c, n);
    let sol = solve_linear(matrix, rhs_vec).ok_or(WzError::NotGosperSummable)?;

    // x(n) = sum_i sol_i n^i
    let mut x = RatFunc::zero();
    let nv = RatFunc::from_poly(MultiPoly::var(n));
    for coeff in sol.iter().rev() {
        x = x.mul(&nv).add(coeff);
    }
    let ratio = RatFunc::from_poly(b_shift)
        .mul(&x)
        .div(&RatFunc::from_poly(dec.c.clone()));

    // G(n+1) - G(n) = t(n) divided by t(n): r(n) R(n+1) - R(n) = 1.
    let check = r.mul(&ratio.shift(n, 1)).sub(&ratio);
    if !check.is_one() {
        return Err(WzError::CertificateFails);
    }
    Ok(GosperCert { ratio })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, parse_ratfunc};

    #[test]
    fn geometric_term() {
        // t = 2^n, r = 2 -> R = 1, G = 2^n
        let r = RatFunc::from_int(2);
        let cert = gosper(&r).unwrap();
        assert!(cert.ratio.is_one());
    }

    #[test]
    fn n_times_factorial() {
        // t = n * n!, r = (n+1)^2 / n -> R = 1/n, G = n!
        let r = parse_ratfunc("(n+1)^2/n").unwrap();
        let cert = gosper(&r).unwrap();
        assert_eq!(cert.ratio, parse_ratfunc("1/n").unwrap());
    }

    #[test]
    fn harmonic_not_summable() {
        // t = 1/n, r = n/(n+1)
        let r = parse_ratfunc("n/(n+1)").unwrap();
        assert!(matches!(gosper(&r), Err(WzError::NotGosperSummable)));
    }

    #[test]
    fn factorial_not_summable() {
        // t = n!, r = n + 1: partial sums of factorials have no
        // hypergeometric closed form.
        let r = parse_ratfunc("n+1").unwrap();
        assert!(matches!(gosper(&r), Err(WzError::NotGosperSummable)));
    }

    #[test]
    fn central_binomial_is_summable() {
        // t = (1/2)_n/(1)_n = C(2n,n)/4^n: partial sums are 2n * t(n),
        // so R = 2n. A classic "looks non-summable but is" case.
        let r = parse_ratfunc("(2*n+1)/(2*n+2)").unwrap();
        let cert = gosper(&r).unwrap();
        assert_eq!(cert.ratio, parse_ratfunc("2*n").unwrap());
    }

    #[test]
    fn polynomial_sum() {
        // t = n^2: G(n) = n(n-1)(2n-1)/6, R = G/t
        let r = parse_ratfunc("(n+1)^2/n^2").unwrap();
        let cert = gosper(&r).unwrap();
        // verify the defining property instead of a closed form
        let check = r.mul(&cert.ratio.shift(Var::N, 1)).sub(&cert.ratio);
        assert!(check.is_one());
    }

    #[test]
    fn decomposition_property() {
        // the decomposition must reproduce r and have shift-coprime a, b
        for src in ["(n+1)^2/n", "(n+3)*(n+1)/(n*(n+5))", "(2*n+1)/(3*n+4)"] {
            let r = parse_ratfunc(src).unwrap();
            let dec = decompose(&r, Var::N);
            let recombined = RatFunc::new(dec.a.clone(), dec.b.clone())
                .mul(&RatFunc::new(dec.c.shift(Var::N, 1), dec.c.clone()));
            assert_eq!(recombined, r, "decomposition mismatch for {}", src);
            assert!(dispersion_set(&dec.a, &dec.b, Var::N).is_empty());
        }
    }

    #[test]
    fn with_parameter_in_coefficients() {
        // t = (k+1)_n: r = (n+k+1)/1... actually r = (k+1+n); G exists:
        // sum (k+1)_n is not summable, but t = (k)_n * k has
        // r = (k+n)/(1) ... use a constructed summable case instead:
        // t(n) = (n + k): G = ((n+k)(n+k-1))/2... r = (n+1+k)/(n+k)
        let r = parse_ratfunc("(n+1+k)/(n+k)").unwrap();
        let cert = gosper(&r).unwrap();
        let check = r.mul(&cert.ratio.shift(Var::N, 1)).sub(&cert.ratio);
        assert!(check.is_one());
    }

    #[test]
    fn brute_force_partial_sums() {
        // For summable ratios, confirm G(b+1) - G(a) = sum of t over [a, b]
        // with t built by iterating the ratio from t(1) = 1.
        use crate::exact::{Rational, Scalar};
        let cases = ["(n+1)^2/n", "(n+1+k)/(n+k)", "(n+1)^3/n^3"];
        for src in cases {
            let r = parse_ratfunc(src).unwrap();
            let cert = match gosper(&r) {
                Ok(c) => c,
                Err(_) => continue,
            };
            let kv = Scalar::Rat(Rational::new(3, 7));
            let at = |f: &RatFunc, n: i64| -> Scalar {
                f.eval(&[(Var::N, Scalar::from_int(n)), (Var::K, kv.clone())])
                    .unwrap()
            };
            // iterate t from n = 1
            let mut t = vec![Scalar::one()];
            for n in 1..12i64 {
                let ratio = at(&r, n);
                let last = t.last().unwrap().clone();
                t.push(&last * &ratio);
            }
            // G(n) = R(n) t(n)
            let g = |n: i64, tv: &Scalar| -> Scalar { &at(&cert.ratio, n) * tv };
            let mut partial = Scalar::zero();
            for n in 1..=10i64 {
                partial = &partial + &t[(n - 1) as usize];
                let diff = &g(n + 1, &t[n as usize]) - &g(1, &t[0]);
                assert_eq!(partial, diff, "partial sum mismatch for {} at n={}", src, n);
            }
        }
        let _ = int_poly(Var::N, &[0]);
    }
}
