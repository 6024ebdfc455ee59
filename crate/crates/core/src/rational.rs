//! Exact rational arithmetic helpers.
//!
//! All arithmetic in this crate is arbitrary-precision rational; no floating
//! point anywhere. Rationals print and parse as `p/q` in lowest terms with
//! positive denominator (`p` when the denominator is 1), which is also the
//! serialization format used in every report.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The scalar type used throughout: an arbitrary-precision rational number.
pub type Rational = BigRational;

/// Shorthand for `p/q` from machine integers.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Shorthand for an integer rational.
pub fn rat_int(p: i64) -> Rational {
    Rational::from_integer(BigInt::from(p))
}

/// Parse a rational from `p/q` or an integer literal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    t.parse::<Rational>()
        .map_err(|_| Error::invalid(format!("cannot parse rational from {t:?}")))
}

/// Distance from a rational to the nearest integer, always in [0, 1/2].
pub fn dist_to_integer(y: &Rational) -> Rational {
    let frac = y - y.floor();
    let complement = Rational::one() - &frac;
    if frac <= complement {
        frac
    } else {
        complement
    }
}

/// Least common multiple of the denominators of a rational vector.
///
/// Returns 1 for the empty vector.
pub fn denominator_lcm(v: &[Rational]) -> BigInt {
    let mut acc = BigInt::one();
    for r in v {
        acc = num_integer::lcm(acc, r.denom().clone());
    }
    acc
}

/// Greatest common divisor of the absolute values of the entries.
///
/// Returns 0 for an all-zero (or empty) vector.
pub fn entry_gcd(v: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for x in v {
        acc = num_integer::gcd(acc, x.abs());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for s in ["1/2", "-3/4", "7", "0", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        // non-canonical spellings normalize
        assert_eq!(parse_rational("4/8").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("6/3").unwrap().to_string(), "2");
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn dist_examples() {
        assert_eq!(dist_to_integer(&rat(1, 2)), rat(1, 2));
        assert_eq!(dist_to_integer(&rat(5, 4)), rat(1, 4));
        assert_eq!(dist_to_integer(&rat(7, 4)), rat(1, 4));
        assert_eq!(dist_to_integer(&rat_int(-3)), rat_int(0));
        assert_eq!(dist_to_integer(&rat(-1, 3)), rat(1, 3));
    }

    #[test]
    fn lcm_and_gcd() {
        let v = [rat(1, 2), rat(1, 3), rat_int(5)];
        assert_eq!(denominator_lcm(&v), BigInt::from(6));
        let w = [BigInt::from(4), BigInt::from(-6), BigInt::from(0)];
        assert_eq!(entry_gcd(&w), BigInt::from(2));
        assert_eq!(entry_gcd(&[]), BigInt::from(0));
    }
}
