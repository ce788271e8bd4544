use num_bigint::BigInt;

use crate::exact::{ExactError, Rational, Scalar};

/// Parse the textual scalar format: an integer, `p/q`, or a sum of such
/// terms with optional `sqrt(d)` factors, e.g. `9-4*sqrt(5)` or
/// `1/8-1/40*sqrt(5)`. Whitespace is ignored.
pub fn parse_scalar(text: &str) -> Result<Scalar, ExactError> {
    let mut p = Cursor::new(text);
    let value = p.scalar()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("trailing input"));
    }
    Ok(value)
}

pub(crate) struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { bytes: text.as_bytes(), pos: 0 }
    }

    pub(crate) fn err(&self, msg: &str) -> ExactError {
        ExactError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    pub(crate) fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.bytes.len()
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    /// Remaining unparsed input.
    pub(crate) fn rest(&self) -> &'a str {
        std::str::from_utf8(&self.bytes[self.pos.min(self.bytes.len())..]).unwrap()
    }

    pub(crate) fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    pub(crate) fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, b: u8) -> Result<(), ExactError> {
        if self.eat(b) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", b as char)))
        }
    }

    pub(crate) fn eat_word(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.bytes[self.pos..].starts_with(word.as_bytes()) {
            // Must not be a prefix of a longer identifier.
            let after = self.pos + word.len();
            let next = self.bytes.get(after).copied();
            if next.is_none_or(|c| !c.is_ascii_alphanumeric() && c != b'_') {
                self.pos = after;
                return true;
            }
        }
        false
    }

    pub(crate) fn uint(&mut self) -> Result<BigInt, ExactError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    /// `p` or `p/q` (unsigned).
    pub(crate) fn unsigned_rational(&mut self) -> Result<Rational, ExactError> {
        let num = self.uint()?;
        if self.eat(b'/') {
            let den = self.uint()?;
            if num_traits::Zero::is_zero(&den) {
                return Err(self.err("zero denominator"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_int(num))
        }
    }

    /// One signed term: `rational`, `rational*sqrt(d)`, `sqrt(d)`,
    /// or `sqrt(d)/q`.
    fn scalar_term(&mut self, negate: bool) -> Result<Scalar, ExactError> {
        let coeff = if self.peek() == Some(b's') {
            Rational::one()
        } else {
            let q = self.unsigned_rational()?;
            if !self.eat(b'*') {
                let q = if negate { -q } else { q };
                return Ok(Scalar::Rat(q));
            }
            q
        };
        if !self.eat_word("sqrt") {
            return Err(self.err("expected sqrt(...)"));
        }
        self.expect(b'(')?;
        let d = self.uint()?;
        self.expect(b')')?;
        let d: u64 = d.try_into().map_err(|_| self.err("radicand too large"))?;
        if d < 2 {
            return Err(self.err("radicand must be >= 2"));
        }
        let mut coeff = coeff;
        if self.eat(b'/') {
            let den = self.unsigned_rational()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            coeff = coeff / den;
        }
        if negate {
            coeff = -coeff;
        }
        Ok(Scalar::surd(Rational::zero(), coeff, d))
    }

    pub(crate) fn scalar(&mut self) -> Result<Scalar, ExactError> {
        let mut negate = self.eat(b'-');
        if !negate {
            self.eat(b'+');
        }
        let mut acc = self.scalar_term(negate)?;
        loop {
            if self.eat(b'+') {
                negate = false;
            } else if self.eat(b'-') {
                negate = true;
            } else {
                break;
            }
            let term = self.scalar_term(negate)?;
            acc = acc.try_add(&term)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_scalar("5/6").unwrap(), Scalar::Rat(Rational::new(5, 6)));
        assert_eq!(parse_scalar("-7").unwrap(), Scalar::from_int(-7));
        assert_eq!(parse_scalar(" 12 / 8 ").unwrap(), Scalar::Rat(Rational::new(3, 2)));
    }

    #[test]
    fn parse_surds() {
        let x = parse_scalar("9-4*sqrt(5)").unwrap();
        assert_eq!(x.to_string(), "9-4*sqrt(5)");
        let y = parse_scalar("1/8 - 1/40 * sqrt(5)").unwrap();
        assert_eq!(y.to_string(), "1/8-1/40*sqrt(5)");
        let z = parse_scalar("sqrt(5)").unwrap();
        assert_eq!(z.to_string(), "sqrt(5)");
        let w = parse_scalar("-sqrt(2)/2").unwrap();
        assert_eq!(w.to_string(), "-1/2*sqrt(2)");
    }

    #[test]
    fn roundtrip_display() {
        for text in ["0", "-3/4", "9-4*sqrt(5)", "256/25-512/125*sqrt(5)", "sqrt(30)"] {
            let v = parse_scalar(text).unwrap();
            assert_eq!(parse_scalar(&v.to_string()).unwrap(), v);
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("2 + ").is_err());
        assert!(parse_scalar("sqrt(4x)").is_err());
        assert!(parse_scalar("1 + sqrt(5) + sqrt(2)").is_err()); // mixed radicands
    }
}
