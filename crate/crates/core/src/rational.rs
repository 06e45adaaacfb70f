//! Exact rationals. Thin helpers over `num_rational::BigRational`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// An integer for JSON output: a number when it fits in `i64`, else a string.
#[derive(Serialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

pub fn json_int(n: &BigInt) -> JsonInt {
    n.to_i64()
        .map(JsonInt::Small)
        .unwrap_or_else(|| JsonInt::Big(n.to_string()))
}

/// Parses `-2`, `3` or `7/2`. Surrounding whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::RationalParse(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// The value as an `i64` when it is an integer that fits.
pub fn as_integer(r: &Rational) -> Option<i64> {
    if r.denom().is_one() {
        r.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational(" 7/2 ").unwrap(), rat(7, 2));
        assert_eq!(parse_rational("4/-6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("6/3").unwrap(), int(2));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["x", "", "1/0", "1/", "/2", "1.5", "1/2/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn integrality() {
        assert_eq!(as_integer(&int(5)), Some(5));
        assert_eq!(as_integer(&rat(5, 2)), None);
    }
}
