//! Arbitrary-precision rational numbers and parsing/formatting helpers.
//!
//! The canonical form (reduced, positive denominator) is maintained by
//! `num_rational::BigRational` itself; this module adds the string
//! conventions used by every file format: `"p/q"` or plain `"p"`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational number, reduced with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats as `"p/q"`, or `"p"` when the denominator is 1.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        let mut s = r.numer().to_string();
        s.push('/');
        s.push_str(&r.denom().to_string());
        s
    }
}

/// Parses `"p/q"` or `"p"`. Whitespace is not accepted.
pub fn rational_from_str(s: &str) -> Option<Rational> {
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num.parse().ok()?;
            let d: BigInt = den.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rational::from_integer(n))
        }
    }
}

/// True when `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True when `r` is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rational) -> bool {
    is_integer(r) && !r.numer().is_negative()
}

/// Least common multiple of the coordinate denominators of a point set.
pub fn common_denominator<'a>(points: impl Iterator<Item = &'a Vec<Rational>>) -> BigInt {
    let mut l = BigInt::one();
    for p in points {
        for c in p {
            l = num_integer::lcm(l, c.denom().clone());
        }
    }
    l
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn string_round_trip() {
        for s in ["0", "-7", "2/3", "-11/4"] {
            let r = rational_from_str(s).unwrap();
            assert_eq!(rational_to_string(&r), s);
        }
        // non-canonical input normalizes
        assert_eq!(rational_to_string(&rational_from_str("4/6").unwrap()), "2/3");
        assert_eq!(rational_to_string(&rational_from_str("3/-6").unwrap()), "-1/2");
        assert!(rational_from_str("1/0").is_none());
        assert!(rational_from_str("a").is_none());
    }
}
