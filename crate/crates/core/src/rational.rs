//! Exact rational scalars.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, positive
//! denominator, arbitrary precision. Text form is `p/q`, with `/q` omitted when
//! `q = 1`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `(-1)^k` as a rational.
pub fn sign(negative: bool) -> Rational {
    if negative {
        -Rational::one()
    } else {
        Rational::one()
    }
}

pub fn format(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

pub fn is_nonneg_integer(q: &Rational) -> bool {
    q.is_integer() && !q.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(format(&ratio(-6, 4)), "-3/2");
        assert_eq!(format(&int(7)), "7");
        assert_eq!(parse(" -3/2 "), Some(ratio(-3, 2)));
        assert_eq!(parse("4/2"), Some(int(2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
