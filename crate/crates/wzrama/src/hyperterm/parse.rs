//! Parser and renderer for the on-disk summand grammar:
//! `term := factor (("*"|"/") factor)*` with factors that are Pochhammer
//! symbols `poch(affine, n|k)` with optional integer powers, geometric
//! factors `(scalar)^n` / `(scalar)^k`, parenthesized polynomial
//! prefactors, bare scalars, or parenthesized sub-terms for grouping.

use crate::exact::parse::Cursor;
use crate::exact::Scalar;
use crate::hyperterm::{AffineArg, HyperTerm, PochFactor, RhsShape, TermError};
use crate::poly::parse::{expr_from_cursor, factor_from_cursor};
use crate::poly::{PolyError, RatFunc, Var};

pub fn parse_term(text: &str) -> Result<HyperTerm, TermError> {
    let mut c = Cursor::new(text);
    let term = parse_term_at(&mut c)?;
    c.skip_ws();
    if !c.at_end() {
        return Err(TermError::Syntax { pos: c.pos(), msg: "trailing input".into() });
    }
    for p in term.numer_poch.iter().chain(&term.denom_poch) {
        check_vars_poly(&p.arg.as_poly())?;
    }
    check_vars_poly(term.prefactor.numerator())?;
    check_vars_poly(term.prefactor.denominator())?;
    term.validate()?;
    Ok(term)
}

fn check_vars_poly(p: &crate::poly::MultiPoly) -> Result<(), TermError> {
    for v in [Var::B, Var::C, Var::J] {
        if p.uses_var(v) {
            return Err(TermError::UnknownVariable(v.name().to_string()));
        }
    }
    Ok(())
}

fn poly_err(e: PolyError) -> TermError {
    match e {
        PolyError::Parse { pos, msg } => TermError::Syntax { pos, msg },
        PolyError::Scalar(crate::exact::ExactError::Parse { pos, msg }) => {
            TermError::Syntax { pos, msg }
        }
        other => TermError::Syntax { pos: 0, msg: other.to_string() },
    }
}

fn parse_term_at(c: &mut Cursor<'_>) -> Result<HyperTerm, TermError> {
    let mut acc = HyperTerm::default();
    let negate = c.eat(b'-');
    apply_factor(&mut acc, c, false)?;
    loop {
        if c.eat(b'*') {
            apply_factor(&mut acc, c, false)?;
        } else if c.eat(b'/') {
            apply_factor(&mut acc, c, true)?;
        } else {
            break;
        }
    }
    if negate {
        acc.prefactor = acc.prefactor.neg();
    }
    Ok(acc)
}

fn apply_factor(acc: &mut HyperTerm, c: &mut Cursor<'_>, invert: bool) -> Result<(), TermError> {
    c.skip_ws();
    if c.eat_word("poch") {
        let p = parse_poch(c)?;
        push_poch(acc, p, invert);
        return Ok(());
    }
    if c.eat(b'(') {
        // Either a grouped sub-term (contains poch factors), a geometric
        // base, or a polynomial prefactor; disambiguate on content.
        if peek_word_inside(c, "poch") {
            let sub = parse_term_at(c)?;
            c.expect(b')').map_err(|e| poly_err(e.into()))?;
            merge_term(acc, &sub, invert);
            return Ok(());
        }
        let inner = expr_from_cursor(c).map_err(poly_err)?;
        c.expect(b')').map_err(|e| poly_err(e.into()))?;
        if c.eat(b'^') {
            c.skip_ws();
            if c.eat_word("n") {
                let base = constant_scalar(&inner, c)?;
                apply_geo(&mut acc.z_base, base, invert);
                return Ok(());
            }
            if c.eat_word("k") {
                let base = constant_scalar(&inner, c)?;
                apply_geo(&mut acc.w_base, base, invert);
                return Ok(());
            }
            let neg = c.eat(b'-');
            let e = c.uint().map_err(|e| poly_err(e.into()))?;
            let e: i64 = e
                .try_into()
                .map_err(|_| TermError::Syntax { pos: c.pos(), msg: "exponent too large".into() })?;
            let e = if neg { -e } else { e };
            apply_pre(acc, inner.pow(e), invert);
            return Ok(());
        }
        apply_pre(acc, inner, invert);
        return Ok(());
    }
    // Bare scalar-ish factor (number, sqrt, variable).
    let f = factor_from_cursor(c).map_err(poly_err)?;
    apply_pre(acc, f, invert);
    Ok(())
}

fn apply_geo(slot: &mut Scalar, base: Scalar, invert: bool) {
    if invert {
        *slot = &*slot * &base.try_invert().expect("zero geometric base");
    } else {
        *slot = &*slot * &base;
    }
}

fn apply_pre(acc: &mut HyperTerm, f: RatFunc, invert: bool) {
    acc.prefactor = if invert {
        acc.prefactor.div(&f)
    } else {
        acc.prefactor.mul(&f)
    };
}

fn merge_term(acc: &mut HyperTerm, sub: &HyperTerm, invert: bool) {
    let (into_numer, into_denom) = if invert {
        (&sub.denom_poch, &sub.numer_poch)
    } else {
        (&sub.numer_poch, &sub.denom_poch)
    };
    for p in into_numer {
        push_poch(acc, p.clone(), false);
    }
    for p in into_denom {
        push_poch(acc, p.clone(), true);
    }
    let zf = if invert {
        sub.z_base.try_invert().expect("zero z base")
    } else {
        sub.z_base.clone()
    };
    acc.z_base = &acc.z_base * &zf;
    let wf = if invert {
        sub.w_base.try_invert().expect("zero w base")
    } else {
        sub.w_base.clone()
    };
    acc.w_base = &acc.w_base * &wf;
    apply_pre(acc, sub.prefactor.clone(), invert);
}

fn push_poch(acc: &mut HyperTerm, p: PochFactor, invert: bool) {
    let list = if invert { &mut acc.denom_poch } else { &mut acc.numer_poch };
    for existing in list.iter_mut() {
        if existing.arg == p.arg && existing.idx == p.idx {
            existing.power += p.power;
            return;
        }
    }
    list.push(p);
}

fn constant_scalar(f: &RatFunc, c: &Cursor<'_>) -> Result<Scalar, TermError> {
    f.as_constant().ok_or_else(|| TermError::Syntax {
        pos: c.pos(),
        msg: "geometric base must be a constant scalar".into(),
    })
}

fn parse_poch(c: &mut Cursor<'_>) -> Result<PochFactor, TermError> {
    c.expect(b'(').map_err(|e| poly_err(e.into()))?;
    let arg_expr = expr_from_cursor(c).map_err(poly_err)?;
    c.expect(b',').map_err(|e| poly_err(e.into()))?;
    c.skip_ws();
    let idx = if c.eat_word("n") {
        Var::N
    } else if c.eat_word("k") {
        Var::K
    } else {
        return Err(TermError::Syntax {
            pos: c.pos(),
            msg: "running index must be n or k".into(),
        });
    };
    c.expect(b')').map_err(|e| poly_err(e.into()))?;
    let mut power: u32 = 1;
    if c.eat(b'^') {
        let e = c.uint().map_err(|e| poly_err(e.into()))?;
        power = u32::try_from(e).map_err(|_| TermError::Syntax {
            pos: c.pos(),
            msg: "Pochhammer power too large".into(),
        })?;
        if power == 0 {
            return Err(TermError::Syntax {
                pos: c.pos(),
                msg: "Pochhammer power must be positive".into(),
            });
        }
    }
    let arg = affine_from_expr(&arg_expr)?;
    Ok(PochFactor { arg, idx, power })
}

fn affine_from_expr(f: &RatFunc) -> Result<AffineArg, TermError> {
    let p = f
        .as_poly()
        .ok_or_else(|| TermError::NonAffineArgument(format!("{}", f)))?;
    check_vars_poly(p)?;
    if p.degree(Var::N).unwrap_or(0) > 1 || p.degree(Var::K).unwrap_or(0) > 1 {
        return Err(TermError::NonAffineArgument(p.to_string()));
    }
    let constant = p.coeff_of(Var::N, 0).coeff_of(Var::K, 0).as_constant().unwrap();
    let n_part = p.coeff_of(Var::N, 1);
    let k_part = p.coeff_of(Var::K, 1);
    if n_part.uses_var(Var::K) || k_part.uses_var(Var::N) {
        return Err(TermError::NonAffineArgument(p.to_string()));
    }
    let rational_coeff = |q: &crate::poly::MultiPoly| -> Result<crate::exact::Rational, TermError> {
        match q.as_constant() {
            Some(Scalar::Rat(r)) => Ok(r),
            Some(_) | None => Err(TermError::NonAffineArgument(p.to_string())),
        }
    };
    Ok(AffineArg {
        constant,
        n_coeff: rational_coeff(&n_part)?,
        k_coeff: rational_coeff(&k_part)?,
    })
}

/// True if the next balanced parenthesized region (already opened)
/// contains the given word before its matching close.
fn peek_word_inside(c: &Cursor<'_>, word: &str) -> bool {
    let rest = c.rest();
    let mut depth = 1usize;
    let bytes = rest.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return false;
                }
            }
            b'p' if rest[i..].starts_with(word) => return true,
            _ => {}
        }
        i += 1;
    }
    false
}

/// Interpret a parsed term as the Pochhammer-ratio part of an identity's
/// right-hand side: only constant-argument `k`-running Pochhammers allowed.
pub fn rhs_shape_from_term(term: &HyperTerm, geo_base: Scalar) -> Result<RhsShape, TermError> {
    if !term.prefactor.is_one() || !term.z_base.is_one() || !term.w_base.is_one() {
        return Err(TermError::UnsupportedEvaluation(
            "right-hand shape must be a pure Pochhammer ratio".into(),
        ));
    }
    let convert = |list: &[PochFactor]| -> Result<Vec<(crate::exact::Rational, u32)>, TermError> {
        list.iter()
            .map(|p| {
                if p.idx != Var::K || !p.arg.n_coeff.is_zero() || !p.arg.k_coeff.is_zero() {
                    return Err(TermError::UnsupportedEvaluation(format!(
                        "right-hand shape factor poch({},{}) must be constant in k",
                        p.arg, p.idx
                    )));
                }
                match &p.arg.constant {
                    Scalar::Rat(r) => Ok((r.clone(), p.power)),
                    Scalar::Surd(_) => Err(TermError::UnsupportedEvaluation(
                        "surd Pochhammer start in right-hand shape".into(),
                    )),
                }
            })
            .collect()
    };
    Ok(RhsShape {
        k_poch_numer: convert(&term.numer_poch)?,
        k_poch_denom: convert(&term.denom_poch)?,
        geo_base,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_scalar, Rational};

    #[test]
    fn parse_simple_cubed() {
        let t = parse_term("poch(1/2,n)^3 / poch(1,n)^3 * (-1)^n").unwrap();
        assert_eq!(t.numer_poch.len(), 1);
        assert_eq!(t.numer_poch[0].power, 3);
        assert_eq!(t.denom_poch[0].power, 3);
        assert_eq!(t.z_base, Scalar::from_int(-1));
        assert!(t.prefactor.is_one());
    }

    #[test]
    fn parse_grouped_denominator() {
        let t = parse_term(
            "poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n",
        )
        .unwrap();
        assert_eq!(t.numer_poch.len(), 2);
        assert_eq!(t.denom_poch.len(), 2);
        assert_eq!(t.z_base, Scalar::Rat(Rational::new(1, 2)));
        assert_eq!(t.numer_poch[0].arg.k_coeff, Rational::from_int(2));
        assert_eq!(t.numer_poch[1].arg.k_coeff, Rational::from_int(4));
    }

    #[test]
    fn parse_prefactor_ratio() {
        let t = parse_term(
            "poch(2/3,n)*poch(5/6-k,n)/(poch(1+k,n)*poch(1,n))*(1/3+2*k,n)",
        );
        // missing poch keyword: the affine tuple is invalid syntax
        assert!(t.is_err());
        let t = parse_term(
            "poch(2/3,n)/poch(1,n)*(2/27)^n*(15*n+3*k+5)/(3*n+1)",
        )
        .unwrap();
        assert!(!t.prefactor.is_one());
        assert_eq!(
            t.prefactor,
            crate::poly::parse_ratfunc("(15*n+3*k+5)/(3*n+1)").unwrap()
        );
    }

    #[test]
    fn rejects_running_index_in_argument() {
        let err = parse_term("poch(n,k)").unwrap_err();
        assert!(matches!(err, TermError::NonAffineArgument(_)));
        let err = parse_term("poch(1+2*k,k)").unwrap_err();
        assert!(matches!(err, TermError::NonAffineArgument(_)));
    }

    #[test]
    fn rejects_unknown_variables() {
        let err = parse_term("poch(1/2,n)*(b*n+1)").unwrap_err();
        assert!(matches!(err, TermError::UnknownVariable(_)));
    }

    #[test]
    fn surd_geometric_base() {
        let t = parse_term(
            "poch(1/4-k,n)*poch(1/4-3*k,n)/(poch(1+2*k,n)*poch(1,n))*(9-4*sqrt(5))^n",
        )
        .unwrap();
        assert_eq!(t.z_base, parse_scalar("9-4*sqrt(5)").unwrap());
        assert_eq!(t.radicand(), Some(5));
    }

    #[test]
    fn roundtrip_through_rendering() {
        let sources = [
            "poch(1/2,n)^3/poch(1,n)^3*(-1)^n",
            "poch(1/3+2*k,n)*poch(1/6+4*k,n)/(poch(1+3*k,n)*poch(1,n))*(1/2)^n",
            "poch(1/2-k,n)*poch(5/6+k,n)*poch(1/2+k,n)/(poch(1+k/2,n)*poch(1,n)*poch(1/2+k/2,n))*(3/128)^n*(10*n+6*k+5)/(10*n+5*k+5)",
            "poch(1/2,k)^2*poch(1,k)^2/(poch(5/8,k)^2*poch(7/8,k)^2)",
        ];
        for src in sources {
            let t = parse_term(src).unwrap();
            let rendered = t.to_string();
            let t2 = parse_term(&rendered).unwrap();
            assert_eq!(t, t2, "round-trip failed for {}", src);
        }
    }

    #[test]
    fn rhs_shape_conversion() {
        let t = parse_term("poch(1/3,k)*poch(1,k)/(poch(13/24,k)*poch(19/24,k))").unwrap();
        let shape = rhs_shape_from_term(&t, Scalar::Rat(Rational::new(27, 4))).unwrap();
        assert_eq!(shape.k_poch_numer.len(), 2);
        assert_eq!(shape.k_poch_denom.len(), 2);
        let bad = parse_term("poch(1/3+k,k)");
        assert!(bad.is_err());
    }
}
