use std::time::Instant;
use wzrama::hyperterm::{parse_term, rhs_shape_from_term};
use wzrama::poly::{RatFunc, Var};

fn main() {
    let t0 = Instant::now();
    let term = parse_term("poch(1/3-k,n)*poch(2/3-k,n)/(poch(1+k,n)*poch(1,n))*(-1/8)^n").unwrap();
    let shape_term = parse_term("poch(1,k)/poch(5/6,k)").unwrap();
    let rhs = rhs_shape_from_term(&shape_term, wzrama::exact::parse_scalar("27/32").unwrap()).unwrap();
    eprintln!("parse: {:?}", t0.elapsed());

    let t1 = Instant::now();
    let rho_n = term.shift_quotient(Var::N).unwrap();
    let rho_k0 = term.shift_quotient(Var::K).unwrap();
    eprintln!("shift quotients: {:?}", t1.elapsed());
    eprintln!("rho_n = {}", rho_n);
    eprintln!("rho_k0 = {}", rho_k0);

    let t2 = Instant::now();
    let rho_k = rho_k0.div(&rhs.shift_ratio(1));
    eprintln!("rho_k div: {:?}  rho_k = {}", t2.elapsed(), rho_k);

    let t3 = Instant::now();
    let s = rho_k.sub(&RatFunc::one());
    eprintln!("s: {:?} s = {}", t3.elapsed(), s);

    let t4 = Instant::now();
    let s1 = s.shift(Var::N, 1);
    eprintln!("s shift: {:?}", t4.elapsed());
    let t5 = Instant::now();
    let gr = rho_n.mul(&s1).div(&s);
    eprintln!("gosper ratio: {:?} = {}", t5.elapsed(), gr);

    let t6 = Instant::now();
    let dec = wzrama::wz::decompose_debug(&gr);
    eprintln!("decompose: {:?} a={} b={} c={}", t6.elapsed(), dec.a, dec.b, dec.c);

    let t7 = Instant::now();
    let cert = wzrama::wz::gosper(&gr).unwrap();
    eprintln!("gosper total: {:?} R_t={}", t7.elapsed(), cert.ratio);
}
