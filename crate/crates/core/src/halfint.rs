use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::Rational;

/// An exact element of ½ℤ, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);

    pub const fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt(2 * n)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub const fn is_positive(self) -> bool {
        self.0 > 0
    }

    /// `self + k` for an integer `k`.
    pub const fn shift(self, k: i64) -> Self {
        HalfInt(self.0 + 2 * k)
    }

    /// Exact conversion from a rational with denominator 1 or 2.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let twice = r * Rational::from_integer(BigInt::from(2));
        if twice.denom().is_one() {
            twice.numer().to_i64().map(HalfInt)
        } else {
            None
        }
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(BigInt::from(self.0), BigInt::from(2))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl Zero for HalfInt {
    fn zero() -> Self {
        HalfInt(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(HalfInt::from_twice(1).to_string(), "1/2");
        assert_eq!(HalfInt::from_twice(-3).to_string(), "-3/2");
        assert_eq!(HalfInt::from_twice(-4).to_string(), "-2");
        assert_eq!(HalfInt::ZERO.to_string(), "0");
    }

    #[test]
    fn rational_round_trip() {
        let r = Rational::new(BigInt::from(-7), BigInt::from(2));
        assert_eq!(HalfInt::from_rational(&r), Some(HalfInt::from_twice(-7)));
        assert_eq!(HalfInt::from_twice(-7).to_rational(), r);
        let third = Rational::new(BigInt::from(1), BigInt::from(3));
        assert_eq!(HalfInt::from_rational(&third), None);
    }

    #[test]
    fn arithmetic() {
        let a = HalfInt::from_twice(3);
        assert_eq!(a + HalfInt::HALF, HalfInt::from_int(2));
        assert_eq!(a.shift(-2), HalfInt::from_twice(-1));
        assert_eq!(-a, HalfInt::from_twice(-3));
        assert_eq!((-a).abs(), a);
    }
}
