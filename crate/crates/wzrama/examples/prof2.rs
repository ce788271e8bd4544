use std::time::Instant;
use wzrama::hyperterm::parse_term;
use wzrama::poly::{MultiPoly, RatFunc, Var};

fn main() {
    let term = parse_term("poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n").unwrap();
    let weight = &(&MultiPoly::var(Var::N) + &MultiPoly::var(Var::B).mul(&MultiPoly::var(Var::K))) + &MultiPoly::var(Var::C);
    let mut weighted = term.clone();
    weighted.prefactor = weighted.prefactor.mul(&RatFunc::from_poly(weight.clone()));

    let t0 = Instant::now();
    let r_n = weighted.shift_quotient(Var::N).unwrap();
    let rho_k = weighted.shift_quotient(Var::K).unwrap();
    eprintln!("quotients: {:?}", t0.elapsed());

    let t1 = Instant::now();
    let u1 = rho_k.clone();
    let u2 = u1.mul(&rho_k.shift(Var::K, 1));
    eprintln!("u2: {:?} (num terms: {}, den terms: {})", t1.elapsed(), u2.numerator().num_terms(), u2.denominator().num_terms());

    let t2 = Instant::now();
    let den = wzrama::poly::gcd::mv_lcm(&MultiPoly::one(), u1.denominator());
    let den = wzrama::poly::gcd::mv_lcm(&den, u2.denominator());
    eprintln!("lcm den: {:?} ({} terms, deg n {:?})", t2.elapsed(), den.num_terms(), den.degree(Var::N));

    let t3 = Instant::now();
    let rho = r_n.mul(&RatFunc::from_poly(den.clone())).div(&RatFunc::from_poly(den.shift(Var::N, 1)));
    eprintln!("rho: {:?} (num {} terms deg_n {:?} / den {} terms)", t3.elapsed(), rho.numerator().num_terms(), rho.numerator().degree(Var::N), rho.denominator().num_terms());

    let t4 = Instant::now();
    let dec = wzrama::wz::decompose_debug(&rho);
    eprintln!("decompose: {:?} (a deg {:?}, b deg {:?}, c deg {:?})", t4.elapsed(), dec.a.degree(Var::N), dec.b.degree(Var::N), dec.c.degree(Var::N));

    let t5 = Instant::now();
    let tel = wzrama::wz::zeilberger(&weighted, 2).unwrap();
    eprintln!("zeilberger total: {:?} order {}", t5.elapsed(), tel.order);
}
