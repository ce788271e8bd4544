//! Creative telescoping: find `sigma_0(k), ..., sigma_J(k)` and a
//! certificate `R(n, k)` with
//! `sum_j sigma_j(k) F(n, k+j) = G(n+1, k) - G(n, k)`, `G = R * F`,
//! summing over `n` with the operator acting by the `k`-shift.
//!
//! The ansatz reduces to a parameterized Gosper problem: with
//! `u_j = F(n,k+j)/F(n,k)` brought over a common denominator `Q`, the
//! combination is `(F/Q) * P(n; sigma)` and the Gosper equation becomes
//! linear in the `x`-coefficients and the `sigma_j` jointly.

use crate::hyperterm::HyperTerm;
use crate::poly::gcd::{mv_gcd, mv_lcm};
use crate::poly::{MultiPoly, RatFunc, Var};
use crate::wz::gosper::{decompose, degree_bound, equation_columns};
use crate::wz::linalg::null_space;
use crate::wz::WzError;

/// A telescoping operator together with its verified certificate.
#[derive(Clone, Debug)]
pub struct Telescoper {
    /// Effective order `J` (highest shift with nonzero coefficient).
    pub order: usize,
    /// `k`-rescale applied to make the term proper (1 = none).
    pub lambda: u64,
    /// Operator coefficients `sigma_0..sigma_J`, normalized so that
    /// `sigma_J` is monic in `k`.
    pub sigma: Vec<RatFunc>,
    /// Certificate `R(n, k)` with `G = R * F` (for the monic-normalized
    /// operator).
    pub certificate: RatFunc,
}

impl Telescoper {
    /// The operator coefficients as polynomials in `(k, b, c)`: common
    /// denominator cleared and overall content removed.
    pub fn sigma_primitive(&self) -> Vec<MultiPoly> {
        let mut den = MultiPoly::one();
        for s in &self.sigma {
            den = mv_lcm(&den, s.denominator());
        }
        let cleared: Vec<MultiPoly> = self
            .sigma
            .iter()
            .map(|s| {
                s.mul(&RatFunc::from_poly(den.clone()))
                    .as_poly()
                    .expect("common denominator clears")
                    .clone()
            })
            .collect();
        let mut content = MultiPoly::zero();
        for p in &cleared {
            content = mv_gcd(&content, p);
        }
        if content.is_zero() || content.is_one() {
            return cleared;
        }
        cleared
            .iter()
            .map(|p| p.div_exact(&content).expect("content divides"))
            .collect()
    }
}

/// Minimal-order telescoper for summation of `t` over `n`, trying orders
/// `J = 1, 2, ..., max_order`. The certificate is verified symbolically
/// before returning.
pub fn zeilberger(t: &HyperTerm, max_order: usize) -> Result<Telescoper, WzError> {
    assert!(max_order >= 1);
    let lambda = t.k_denominator_lcm();
    let t = t.k_rescaled(lambda);
    let r_n = t.shift_quotient(Var::N)?;
    let rho_k = t.shift_quotient(Var::K)?;

    for order in 1..=max_order {
        if let Some(tel) = try_order(&r_n, &rho_k, order, lambda)? {
            return Ok(tel);
        }
    }
    Err(WzError::NoTelescoperUpToOrder(max_order))
}

fn try_order(
    r_n: &RatFunc,
    rho_k: &RatFunc,
    order: usize,
    lambda: u64,
) -> Result<Option<Telescoper>, WzError> {
    // u_j = F(n, k+j)/F(n, k) by composing k-shift quotients.
    let mut u = vec![RatFunc::one()];
    for j in 0..order {
        let next = u[j].mul(&rho_k.shift(Var::K, j as i64));
        u.push(next);
    }
    let mut den = MultiPoly::one();
    for uj in &u {
        den = mv_lcm(&den, uj.denominator());
    }
    let num: Vec<MultiPoly> = u
        .iter()
        .map(|uj| {
            uj.mul(&RatFunc::from_poly(den.clone()))
                .as_poly()
                .expect("lcm clears denominator")
                .clone()
        })
        .collect();

    // Reduced term t~ = F/den with ratio rho = r_n * den / den(n+1).
    let rho = r_n
        .mul(&RatFunc::from_poly(den.clone()))
        .div(&RatFunc::from_poly(den.shift(Var::N, 1)));
    let dec = decompose(&rho, Var::N);
    let b_shift = dec.b.shift(Var::N, -1);
    let rhs_deg = dec.c.degree(Var::N).unwrap_or(0)
        + num
            .iter()
            .filter_map(|p| p.degree(Var::N))
            .max()
            .unwrap_or(0);
    let d = match degree_bound(&dec.a, &b_shift, rhs_deg, Var::N) {
        None => return Ok(None),
        Some(d) => d,
    };

    // Columns: x-coefficients then sigma_j, solving
    // sum_i x_i P_i(n) - c(n) * sum_j sigma_j num_j(n) = 0.
    let mut cols = equation_columns(&dec.a, &b_shift, d, Var::N);
    for nj in &num {
        cols.push(dec.c.mul(nj).neg());
    }
    let max_deg = cols.iter().filter_map(|p| p.degree(Var::N)).max().unwrap_or(0);
    let mut matrix = Vec::with_capacity(max_deg + 1);
    for deg in 0..=max_deg {
        matrix.push(
            cols.iter()
                .map(|p| RatFunc::from_poly(p.coeff_of(Var::N, deg)))
                .collect::<Vec<_>>(),
        );
    }
    let basis = null_space(matrix);
    let nx = d + 1;
    let chosen = basis
        .iter()
        .max_by_key(|v| {
            v[nx..]
                .iter()
                .rposition(|s| !s.is_zero())
                .map(|p| p + 1)
                .unwrap_or(0)
        })
        .filter(|v| v[nx..].iter().any(|s| !s.is_zero()));
    let chosen = match chosen {
        None => return Ok(None),
        Some(v) => v.clone(),
    };
    let sigma_raw = &chosen[nx..];
    let eff_order = sigma_raw.iter().rposition(|s| !s.is_zero()).unwrap();
    if eff_order == 0 {
        // A "telescoper" that never shifts k certifies nothing here.
        return Ok(None);
    }

    // x(n) and the certificate R = b(n-1) x / (c * den).
    let nv = RatFunc::from_poly(MultiPoly::var(Var::N));
    let mut x = RatFunc::zero();
    for coeff in chosen[..nx].iter().rev() {
        x = x.mul(&nv).add(coeff);
    }
    let r_cert = RatFunc::from_poly(b_shift)
        .mul(&x)
        .div(&RatFunc::from_poly(dec.c.mul(&den)));

    // Verify: sum_j sigma_j u_j = R(n+1,k) r_n - R(n,k), exactly.
    let mut combo = RatFunc::zero();
    for (j, s) in sigma_raw.iter().enumerate() {
        if !s.is_zero() {
            combo = combo.add(&s.mul(&u[j]));
        }
    }
    let residual = combo
        .sub(&r_cert.shift(Var::N, 1).mul(r_n))
        .add(&r_cert);
    if !residual.is_zero() {
        return Err(WzError::CertificateFails);
    }

    // Normalize: sigma_J monic in k; the certificate scales along.
    let sj = &sigma_raw[eff_order];
    let lead = sj.numerator().leading_coeff(Var::K);
    let scale = RatFunc::new(lead, sj.denominator().clone());
    let sigma: Vec<RatFunc> = sigma_raw[..=eff_order]
        .iter()
        .map(|s| s.div(&scale))
        .collect();
    let certificate = r_cert.div(&scale);

    Ok(Some(Telescoper { order: eff_order, lambda, sigma, certificate }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperterm::parse_term;

    #[test]
    fn binomial_row_sums() {
        // t(n, k) = C(k, n) = (-1)^n (-k)_n / (1)_n; sum over n is 2^k,
        // so the telescoper is K - 2 once sigma_1 is monic.
        let t = parse_term("poch(-k,n)/poch(1,n)*(-1)^n").unwrap();
        let tel = zeilberger(&t, 2).unwrap();
        assert_eq!(tel.order, 1);
        assert!(tel.sigma[1].is_one());
        assert_eq!(tel.sigma[0], RatFunc::from_int(-2));
    }

    #[test]
    fn binomial_brute_force() {
        use crate::exact::Rational;
        // Confirm S(k+1) = 2 S(k) by summing rows of Pascal's triangle.
        let t = parse_term("poch(-k,n)/poch(1,n)*(-1)^n").unwrap();
        for k in 0..=15u64 {
            let kr = Rational::from_int(k as i64);
            let mut sum = crate::exact::Scalar::zero();
            for n in 0..=k {
                sum = &sum + &t.eval_exact(n, &kr).unwrap();
            }
            let expect = Rational::from_int(2).pow(k as i64);
            assert_eq!(sum, crate::exact::Scalar::Rat(expect));
        }
    }

    #[test]
    fn vandermonde_style_term() {
        // t = (1/2)_n (..k..) / ... : a term certifying a 2F1 evaluation;
        // just require some telescoper of order <= 2 with a verified
        // certificate (the verification happens inside zeilberger).
        let t = parse_term(
            "poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n",
        )
        .unwrap();
        let tel = zeilberger(&t, 2).unwrap();
        assert!(tel.order <= 2);
    }
}
