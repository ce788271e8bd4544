use std::fmt;

use crate::exact::Rational;

/// Element `a + b*sqrt(d)` of the real quadratic field Q(sqrt(d)).
///
/// The radicand `d` is a square-free integer >= 2 and is fixed per
/// computation context; arithmetic never mixes different radicands.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd {
    pub a: Rational,
    pub b: Rational,
    pub d: u64,
}

impl QuadSurd {
    pub fn new(a: Rational, b: Rational, d: u64) -> Self {
        assert!(d >= 2, "radicand must be >= 2");
        QuadSurd { a, b, d }
    }

    pub fn sqrt_of(d: u64) -> Self {
        QuadSurd::new(Rational::zero(), Rational::one(), d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Conjugate `a - b*sqrt(d)`.
    pub fn conjugate(&self) -> Self {
        QuadSurd::new(self.a.clone(), -&self.b, self.d)
    }

    /// Field norm `a^2 - d*b^2`; equals `x * conjugate(x)`.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&(&self.b * &self.b) * &Rational::from_int(self.d as i64))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        QuadSurd::new(&self.a + &rhs.a, &self.b + &rhs.b, self.d)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        QuadSurd::new(&self.a - &rhs.a, &self.b - &rhs.b, self.d)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.d, rhs.d);
        let d = Rational::from_int(self.d as i64);
        let a = &(&self.a * &rhs.a) + &(&(&self.b * &rhs.b) * &d);
        let b = &(&self.a * &rhs.b) + &(&self.b * &rhs.a);
        QuadSurd::new(a, b, self.d)
    }

    pub fn neg(&self) -> Self {
        QuadSurd::new(-&self.a, -&self.b, self.d)
    }

    /// Multiplicative inverse via the conjugate: `1/x = conj(x) / norm(x)`.
    ///
    /// The norm of a nonzero element is nonzero because `d` is not a
    /// perfect square.
    pub fn invert(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let n = self.norm();
        assert!(!n.is_zero(), "zero norm for nonzero surd; radicand not square-free?");
        let inv = n.recip();
        QuadSurd::new(&self.a * &inv, &(-&self.b) * &inv, self.d)
    }

    /// Sign of the real value `a + b*sqrt(d)`.
    pub fn signum(&self) -> i8 {
        // Compare a against -b*sqrt(d) by comparing squares, watching signs.
        let sa = if self.a.is_zero() { 0 } else if self.a.is_positive() { 1 } else { -1 };
        let sb = if self.b.is_zero() { 0 } else if self.b.is_positive() { 1 } else { -1 };
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: value sign follows whichever square dominates.
        let a2 = &self.a * &self.a;
        let db2 = &(&self.b * &self.b) * &Rational::from_int(self.d as i64);
        match a2.cmp_value(&db2) {
            std::cmp::Ordering::Greater => sa,
            std::cmp::Ordering::Less => sb,
            std::cmp::Ordering::Equal => 0, // impossible for square-free d, kept for totality
        }
    }
}

impl fmt::Display for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let write_surd_part = |f: &mut fmt::Formatter<'_>, b: &Rational| -> fmt::Result {
            if b.is_one() {
                write!(f, "sqrt({})", self.d)
            } else if *b == -Rational::one() {
                write!(f, "-sqrt({})", self.d)
            } else {
                write!(f, "{}*sqrt({})", b, self.d)
            }
        };
        if self.a.is_zero() {
            write_surd_part(f, &self.b)
        } else if self.b.is_negative() {
            write!(f, "{}-", self.a)?;
            write_surd_part(f, &self.b.abs())
        } else {
            write!(f, "{}+", self.a)?;
            write_surd_part(f, &self.b)
        }
    }
}

impl fmt::Debug for QuadSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// True if `d` has no repeated prime factor. Radicands in this crate are
/// small, so trial division is fine.
pub fn is_square_free(d: u64) -> bool {
    if d < 2 {
        return false;
    }
    let mut n = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return false;
            }
        }
        p += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: i64, b: i64, d: u64) -> QuadSurd {
        QuadSurd::new(Rational::from_int(a), Rational::from_int(b), d)
    }

    #[test]
    fn conjugate_product_is_norm() {
        let x = s(9, -4, 5);
        let prod = x.mul(&x.conjugate());
        assert_eq!(prod.a, Rational::one());
        assert!(prod.b.is_zero());
        assert_eq!(x.norm(), Rational::one());
    }

    #[test]
    fn invert_unit() {
        let x = s(9, -4, 5);
        let inv = x.invert();
        assert_eq!(inv, s(9, 4, 5));
    }

    #[test]
    fn norm_example() {
        // 1/8 - (1/40)*sqrt(5): norm = 1/64 - 5/1600 = 1/80
        let x = QuadSurd::new(Rational::new(1, 8), Rational::new(-1, 40), 5);
        assert_eq!(x.norm(), Rational::new(1, 80));
    }

    #[test]
    fn sign_of_small_surd() {
        assert_eq!(s(9, -4, 5).signum(), 1); // 9 - 8.944 > 0
        assert_eq!(s(2, -1, 5).signum(), -1); // 2 - 2.236 < 0
        assert_eq!(s(0, 0, 5).signum(), 0);
        assert_eq!(s(-3, 2, 2).signum(), -1); // -3 + 2.83 < 0
    }

    #[test]
    fn square_free_check() {
        assert!(is_square_free(5));
        assert!(is_square_free(6));
        assert!(!is_square_free(4));
        assert!(!is_square_free(12));
        assert!(!is_square_free(1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(s(9, -4, 5).to_string(), "9-4*sqrt(5)");
        assert_eq!(s(0, 1, 5).to_string(), "sqrt(5)");
        assert_eq!(
            QuadSurd::new(Rational::new(1, 8), Rational::new(-1, 40), 5).to_string(),
            "1/8-1/40*sqrt(5)"
        );
    }
}
