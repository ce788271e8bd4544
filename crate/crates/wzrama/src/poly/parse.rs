//! Parser for the textual polynomial / rational-function format used in
//! catalog files and certificate reports: `+ - * / ^`, integer and
//! `sqrt(d)` atoms, and the variables `n k b c j`. The printed form of
//! every polynomial parses back to the same polynomial.

use crate::exact::parse::Cursor;
use crate::exact::{ExactError, Scalar};
use crate::poly::{MultiPoly, PolyError, RatFunc};

pub fn parse_ratfunc(text: &str) -> Result<RatFunc, PolyError> {
    let mut c = Cursor::new(text);
    let f = expr_from_cursor(&mut c)?;
    c.skip_ws();
    if !c.at_end() {
        return Err(PolyError::Parse { pos: c.pos(), msg: "trailing input".into() });
    }
    Ok(f)
}

/// Parse one rational-function expression starting at the cursor position,
/// leaving the cursor after it. Used by the term grammar for embedded
/// affine arguments and prefactors.
pub(crate) fn expr_from_cursor<'a, 'b>(c: &'b mut Cursor<'a>) -> Result<RatFunc, PolyError> {
    PolyCursor { c }.expr()
}

/// Parse a single factor (atom with optional integer power) at the cursor.
pub(crate) fn factor_from_cursor<'a, 'b>(c: &'b mut Cursor<'a>) -> Result<RatFunc, PolyError> {
    PolyCursor { c }.factor()
}

/// Parse a polynomial: a rational-function expression whose denominator
/// reduces to 1 (constant denominators are absorbed by normalization).
pub fn parse_poly(text: &str) -> Result<MultiPoly, PolyError> {
    let f = parse_ratfunc(text)?;
    match f.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(PolyError::Parse {
            pos: 0,
            msg: format!("expression is not polynomial: denominator {}", f.denominator()),
        }),
    }
}

struct PolyCursor<'a, 'b> {
    c: &'b mut Cursor<'a>,
}

impl<'a, 'b> PolyCursor<'a, 'b> {
    fn fail(&self, msg: &str) -> PolyError {
        match self.c.err(msg) {
            ExactError::Parse { pos, msg } => PolyError::Parse { pos, msg },
            other => PolyError::Scalar(other),
        }
    }

    fn expr(&mut self) -> Result<RatFunc, PolyError> {
        let mut negate = self.c.eat(b'-');
        if !negate {
            self.c.eat(b'+');
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            if self.c.eat(b'+') {
                negate = false;
            } else if self.c.eat(b'-') {
                negate = true;
            } else {
                break;
            }
            let t = self.term()?;
            acc = if negate { acc.sub(&t) } else { acc.add(&t) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RatFunc, PolyError> {
        let mut acc = self.factor()?;
        loop {
            if self.c.eat(b'*') {
                acc = acc.mul(&self.factor()?);
            } else if self.c.eat(b'/') {
                let d = self.factor()?;
                if d.is_zero() {
                    return Err(self.fail("division by zero"));
                }
                acc = acc.div(&d);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<RatFunc, PolyError> {
        let base = self.atom()?;
        if self.c.eat(b'^') {
            let neg = self.c.eat(b'-');
            let e = self.c.uint().map_err(PolyError::Scalar)?;
            let e: i64 = e
                .try_into()
                .map_err(|_| self.fail("exponent too large"))?;
            let e = if neg { -e } else { e };
            if e < 0 && base.is_zero() {
                return Err(self.fail("zero to a negative power"));
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<RatFunc, PolyError> {
        if self.c.eat(b'(') {
            let e = self.expr()?;
            self.c.expect(b')').map_err(PolyError::Scalar)?;
            return Ok(e);
        }
        if self.c.eat(b'-') {
            return Ok(self.atom()?.neg());
        }
        match self.c.peek() {
            Some(d) if d.is_ascii_digit() => {
                let n = self.c.uint().map_err(PolyError::Scalar)?;
                Ok(RatFunc::from_scalar(Scalar::Rat(n.into())))
            }
            Some(_) => {
                if self.c.eat_word("sqrt") {
                    self.c.expect(b'(').map_err(PolyError::Scalar)?;
                    let d = self.c.uint().map_err(PolyError::Scalar)?;
                    self.c.expect(b')').map_err(PolyError::Scalar)?;
                    let d: u64 = d.try_into().map_err(|_| self.fail("radicand too large"))?;
                    if d < 2 {
                        return Err(self.fail("radicand must be >= 2"));
                    }
                    return Ok(RatFunc::from_scalar(Scalar::surd(
                        crate::exact::Rational::zero(),
                        crate::exact::Rational::one(),
                        d,
                    )));
                }
                for v in crate::poly::ALL_VARS {
                    if self.c.eat_word(v.name()) {
                        return Ok(RatFunc::var(v));
                    }
                }
                Err(self.fail("expected a number, variable, sqrt(...), or parenthesis"))
            }
            None => Err(self.fail("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_poly, Var};

    #[test]
    fn weight_polynomials() {
        let p = parse_poly("12*n+24*k+1").unwrap();
        assert_eq!(p.degree(Var::N), Some(1));
        assert_eq!(p.to_string(), "12*n + 24*k + 1");

        let q = parse_poly("40*n + 20*(sqrt(5)-1)*k + 5 - sqrt(5)").unwrap();
        assert_eq!(q.coeff_of(Var::N, 1), MultiPoly::from_int(40));
        let kc = q.coeff_of(Var::K, 1);
        assert_eq!(kc.as_constant().unwrap().to_string(), "-20+20*sqrt(5)");
    }

    #[test]
    fn rational_coefficients_via_division() {
        let p = parse_poly("k/2 + 1").unwrap();
        assert_eq!(p.to_string(), "1/2*k + 1");
        let q = parse_poly("(3*n^2 + 2*n*k + 1/12)").unwrap();
        assert_eq!(q.coeff_of(Var::N, 2), MultiPoly::from_int(3));
    }

    #[test]
    fn printed_form_roundtrips() {
        for text in [
            "3*n^2 + 2*n*k + 1/12",
            "100*n^2 + 80*n*k + 56*n + 12*k^2 + 20*k + 3",
            "(9-4*sqrt(5))*n - 1/2",
            "n^2*k - 7",
        ] {
            let p = parse_poly(text).unwrap();
            let q = parse_poly(&p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }

    #[test]
    fn ratfunc_expressions() {
        let f = parse_ratfunc("(15*n+3*k+5)/(3*n+1)").unwrap();
        assert_eq!(f.numerator().degree(Var::N), Some(1));
        assert_eq!(f.denominator(), &int_poly(Var::N, &[1, 3]).monic_lex());
        let g = parse_ratfunc("(n^2-1)/(n-1)").unwrap();
        assert_eq!(g.as_poly().unwrap(), &int_poly(Var::N, &[1, 1]));
    }

    #[test]
    fn non_poly_rejected() {
        assert!(parse_poly("1/(n+1)").is_err());
        assert!(parse_poly("n/(2*k)").is_err());
        assert!(parse_ratfunc("n +").is_err());
        assert!(parse_ratfunc("x + 1").is_err());
    }
}
