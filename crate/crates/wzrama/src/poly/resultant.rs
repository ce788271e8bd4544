//! Resultants via fraction-free (Bareiss) elimination on the Sylvester
//! matrix, and the dispersion set computed from integer roots of a shifted
//! resultant.

use crate::exact::{Rational, Scalar};
use crate::poly::gcd::{mv_gcd, poly_gcd};
use crate::poly::{MultiPoly, Var};

/// Resultant of `p` and `q` with respect to `v` (Sylvester determinant).
/// Zero iff the two share a root in `v` over the coefficient field.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> MultiPoly {
    assert!(
        !(p.is_zero() && q.is_zero()),
        "resultant of two zero polynomials"
    );
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero();
    }
    let m = p.degree(v).unwrap();
    let n = q.degree(v).unwrap();
    if m == 0 && n == 0 {
        return MultiPoly::one();
    }
    if m == 0 {
        return p.pow(n);
    }
    if n == 0 {
        return q.pow(m);
    }
    let pc = p.as_univariate(v);
    let qc = q.as_univariate(v);
    let size = m + n;
    let mut mat = vec![vec![MultiPoly::zero(); size]; size];
    for i in 0..n {
        for (d, coeff) in pc.iter().enumerate() {
            // column for x^(m-d) shifted by i
            mat[i][i + m - d] = coeff.clone();
        }
    }
    for i in 0..m {
        for (d, coeff) in qc.iter().enumerate() {
            mat[n + i][i + n - d] = coeff.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free determinant; every division is exact.
fn bareiss_determinant(mut m: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let size = m.len();
    if size == 0 {
        return MultiPoly::one();
    }
    let mut sign = false;
    let mut prev = MultiPoly::one();
    for p in 0..size - 1 {
        if m[p][p].is_zero() {
            let swap = (p + 1..size).find(|&r| !m[r][p].is_zero());
            match swap {
                None => return MultiPoly::zero(),
                Some(r) => {
                    m.swap(p, r);
                    sign = !sign;
                }
            }
        }
        let pivot = m[p][p].clone();
        let pivot_row: Vec<MultiPoly> = m[p].clone();
        for row in m.iter_mut().skip(p + 1) {
            let factor = row[p].clone();
            for j in p + 1..size {
                let t = &row[j].mul(&pivot) - &factor.mul(&pivot_row[j]);
                row[j] = t.div_exact(&prev).expect("bareiss exact division");
            }
            row[p] = MultiPoly::zero();
        }
        prev = pivot;
    }
    let det = m[size - 1][size - 1].clone();
    if sign {
        det.neg()
    } else {
        det
    }
}

/// Dispersion set of `(q, r)` in `n`: all shifts `j >= 0` such that
/// `gcd(q(n), r(n+j))` is non-constant in `n`.
///
/// Candidates come from the non-negative integer roots of
/// `Res_n(q(n), r(n+j))` as a polynomial in `j`; parameters in the
/// coefficients are specialized at sample points, and every candidate is
/// verified by an actual gcd computation, so specialization can only ever
/// over-approximate.
pub fn dispersion_set(q: &MultiPoly, r: &MultiPoly, n: Var) -> Vec<u64> {
    assert!(n != Var::J, "dispersion shift variable clashes");
    if q.degree(n).unwrap_or(0) == 0 || r.degree(n).unwrap_or(0) == 0 {
        return Vec::new();
    }

    // Specialize parameters at a degree-preserving sample point. A shift
    // in the dispersion set is an integer difference of two roots, and
    // under a degree-preserving specialization every root specializes to
    // a root, so the shift is bounded by the specialized root bounds and
    // survives as a common-factor shift of the specialized pair. The
    // exact parametric gcd then confirms each candidate.
    let others: Vec<Var> = [Var::N, Var::K, Var::B, Var::C]
        .into_iter()
        .filter(|v| *v != n && (q.uses_var(*v) || r.uses_var(*v)))
        .collect();
    let samples: [&[(i64, i64)]; 4] = [
        &[(17, 5), (23, 7), (31, 11)],
        &[(101, 13), (57, 8), (-29, 9)],
        &[(-3, 2), (95, 17), (41, 6)],
        &[(211, 3), (13, 19), (77, 10)],
    ];
    let mut candidates: Option<Vec<u64>> = None;
    for sample in samples {
        let mut qs = q.clone();
        let mut rs = r.clone();
        for (i, v) in others.iter().enumerate() {
            let (num, den) = sample[i % sample.len()];
            let value = Scalar::Rat(Rational::new(num, den));
            qs = qs.subst_scalar(*v, &value);
            rs = rs.subst_scalar(*v, &value);
        }
        if qs.degree(n) != q.degree(n) || rs.degree(n) != r.degree(n) {
            continue;
        }
        let bound = root_bound(&qs, n) + root_bound(&rs, n) + 1;
        let mut found = Vec::new();
        for j in 0..=bound {
            let g = mv_gcd(&qs, &rs.shift(n, j as i64));
            if g.degree(n).unwrap_or(0) >= 1 {
                found.push(j);
            }
        }
        candidates = Some(found);
        break;
    }
    let candidates = candidates.expect("degenerate specialization in dispersion");

    let mut out = Vec::new();
    for j in candidates {
        let g = poly_gcd(q, &r.shift(n, j as i64), n);
        if g.degree(n).unwrap_or(0) >= 1 {
            out.push(j);
        }
    }
    out.sort_unstable();
    out
}

/// Integer upper bound on root magnitudes (Cauchy bound) of a univariate
/// polynomial with rational coefficients.
fn root_bound(p: &MultiPoly, v: Var) -> u64 {
    let coeffs = p.as_univariate(v);
    let d = coeffs.len() - 1;
    let lead = coeffs[d]
        .as_constant()
        .expect("specialized polynomial")
        .as_rational()
        .expect("rational coefficients")
        .abs();
    let mut m = Rational::zero();
    for c in &coeffs[..d] {
        let c = c
            .as_constant()
            .expect("specialized polynomial")
            .as_rational()
            .expect("rational coefficients")
            .abs();
        let ratio = &c / &lead;
        if m.cmp_value(&ratio) == std::cmp::Ordering::Less {
            m = ratio;
        }
    }
    use num_traits::ToPrimitive;
    (m + Rational::one()).floor().to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, MultiPoly, Var};

    #[test]
    fn resultant_linear_pair() {
        // Res_n(n - b, n - c) = b - c up to sign; 1x1 Sylvester-style case.
        let p = &MultiPoly::var(Var::N) - &MultiPoly::var(Var::B);
        let q = &MultiPoly::var(Var::N) - &MultiPoly::var(Var::C);
        let r = resultant(&p, &q, Var::N);
        let diff = &MultiPoly::var(Var::B) - &MultiPoly::var(Var::C);
        assert!(r == diff || r == diff.neg());
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        let p = int_poly(Var::N, &[-1, 0, 1]); // n^2 - 1
        let q = int_poly(Var::N, &[-1, 1]); // n - 1
        assert!(resultant(&p, &q, Var::N).is_zero());
    }

    #[test]
    fn resultant_value() {
        // Res_n(n, n-3): |value| = 3
        let r = resultant(
            &int_poly(Var::N, &[0, 1]),
            &int_poly(Var::N, &[-3, 1]),
            Var::N,
        );
        assert!(r == MultiPoly::from_int(3) || r == MultiPoly::from_int(-3));
    }

    #[test]
    fn resultant_matches_root_product() {
        // p = (n-1)(n-2), q = (n-4)(n-5): Res = prod p-root minus q-root
        // = (1-4)(1-5)(2-4)(2-5) = (-3)(-4)(-2)(-3) = 72
        let p = int_poly(Var::N, &[2, -3, 1]);
        let q = int_poly(Var::N, &[20, -9, 1]);
        let r = resultant(&p, &q, Var::N);
        assert_eq!(r, MultiPoly::from_int(72));
    }

    #[test]
    fn dispersion_examples() {
        // q = n, r = n-3 -> {3}
        let d = dispersion_set(&int_poly(Var::N, &[0, 1]), &int_poly(Var::N, &[-3, 1]), Var::N);
        assert_eq!(d, vec![3]);
        // q = n, r = n+1 -> {}
        let d = dispersion_set(&int_poly(Var::N, &[0, 1]), &int_poly(Var::N, &[1, 1]), Var::N);
        assert!(d.is_empty());
        // q = n(n-2), r = (n-1)(n-5) -> {1, 3, 5}
        let q = int_poly(Var::N, &[0, 1]).mul(&int_poly(Var::N, &[-2, 1]));
        let r = int_poly(Var::N, &[-1, 1]).mul(&int_poly(Var::N, &[-5, 1]));
        let d = dispersion_set(&q, &r, Var::N);
        assert_eq!(d, vec![1, 3, 5]);
    }

    #[test]
    fn dispersion_with_parameters() {
        // q = n + k, r = n + k - 4 -> {4} independent of k
        let q = &MultiPoly::var(Var::N) + &MultiPoly::var(Var::K);
        let r = &q + &MultiPoly::from_int(-4);
        assert_eq!(dispersion_set(&q, &r, Var::N), vec![4]);
    }

    #[test]
    fn dispersion_brute_force_agreement() {
        // randomized-ish small factored inputs, brute force scan j = 0..10
        let cases: Vec<(MultiPoly, MultiPoly)> = vec![
            (
                int_poly(Var::N, &[0, 1]).mul(&int_poly(Var::N, &[-7, 1])),
                int_poly(Var::N, &[-2, 1]).mul(&int_poly(Var::N, &[-9, 1])),
            ),
            (
                int_poly(Var::N, &[1, 2]).mul(&int_poly(Var::N, &[-5, 2])),
                int_poly(Var::N, &[1, 2]),
            ),
            (
                int_poly(Var::N, &[3, 1, 1]),
                int_poly(Var::N, &[3, 1, 1]).shift(Var::N, -6),
            ),
        ];
        for (q, r) in cases {
            let got = dispersion_set(&q, &r, Var::N);
            let mut expect = Vec::new();
            for j in 0..=10u64 {
                let g = poly_gcd(&q, &r.shift(Var::N, j as i64), Var::N);
                if g.degree(Var::N).unwrap_or(0) >= 1 {
                    expect.push(j);
                }
            }
            assert_eq!(got, expect, "dispersion mismatch for {} / {}", q, r);
        }
    }
}
