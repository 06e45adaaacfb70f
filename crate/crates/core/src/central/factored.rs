use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::rational::{json_int, JsonInt, Rational};

/// `constant · Π (u - r)^e` with rational roots and nonzero integer exponents.
///
/// Kept fully cancelled, so two values are equal as rational functions iff
/// they are equal as structs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FactoredRational {
    constant: Rational,
    factors: BTreeMap<Rational, i64>,
}

impl FactoredRational {
    pub fn constant(c: Rational) -> Self {
        assert!(!c.is_zero(), "factored rational functions are nonzero");
        FactoredRational {
            constant: c,
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `(u - root)^exponent`.
    pub fn linear_power(root: Rational, exponent: i64) -> Self {
        let mut f = Self::one();
        f.multiply_factor(root, exponent);
        f
    }

    pub fn leading(&self) -> &Rational {
        &self.constant
    }

    /// Roots with their exponents, increasing by root.
    pub fn factors(&self) -> impl Iterator<Item = (&Rational, i64)> + '_ {
        self.factors.iter().map(|(r, &e)| (r, e))
    }

    pub fn exponent(&self, root: &Rational) -> i64 {
        self.factors.get(root).copied().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.factors.is_empty()
    }

    fn multiply_factor(&mut self, root: Rational, exponent: i64) {
        if exponent == 0 {
            return;
        }
        let slot = self.factors.entry(root.clone()).or_insert(0);
        *slot += exponent;
        if *slot == 0 {
            self.factors.remove(&root);
        }
    }

    pub fn inverse(&self) -> Self {
        FactoredRational {
            constant: self.constant.recip(),
            factors: self.factors.iter().map(|(r, &e)| (r.clone(), -e)).collect(),
        }
    }

    /// Value at `u`; `None` at a pole.
    pub fn eval(&self, u: &Rational) -> Option<Rational> {
        let mut num = self.constant.clone();
        let mut den = Rational::one();
        for (r, &e) in &self.factors {
            let base = u - r;
            let pow = num_traits::pow(base, e.unsigned_abs() as usize);
            if e > 0 {
                num *= pow;
            } else {
                den *= pow;
            }
        }
        (!den.is_zero()).then(|| num / den)
    }

    /// Degree of the numerator minus degree of the denominator.
    pub fn degree(&self) -> i64 {
        self.factors.values().sum()
    }
}

impl Mul for &FactoredRational {
    type Output = FactoredRational;
    fn mul(self, rhs: &FactoredRational) -> FactoredRational {
        let mut out = self.clone();
        out.constant *= &rhs.constant;
        for (r, &e) in &rhs.factors {
            out.multiply_factor(r.clone(), e);
        }
        out
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &FactoredRational {
    type Output = FactoredRational;
    fn div(self, rhs: &FactoredRational) -> FactoredRational {
        self * &rhs.inverse()
    }
}

fn render_factor(root: &Rational, exponent: u64) -> String {
    let base = if root.is_zero() {
        "u".to_string()
    } else if root.is_positive() {
        format!("(u-{root})")
    } else {
        format!("(u+{})", -root)
    };
    if exponent == 1 {
        base
    } else {
        format!("{base}^{exponent}")
    }
}

/// Renders e.g. `-(u-1/2)^4(u+3/2)/((u-3/2)(u+1/2)^2)`. Factors are listed by
/// decreasing root, so the printed offsets increase.
impl fmt::Display for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        let mut den = Vec::new();
        for (r, &e) in self.factors.iter().rev() {
            if e > 0 {
                num.push_str(&render_factor(r, e as u64));
            } else {
                den.push(render_factor(r, e.unsigned_abs()));
            }
        }
        let magnitude = self.constant.abs();
        if self.constant.is_negative() {
            write!(f, "-")?;
        }
        if num.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{num}")?;
        } else {
            write!(f, "{magnitude}*{num}")?;
        }
        match den.as_slice() {
            [] => Ok(()),
            [single] if !single.contains('^') => write!(f, "/{single}"),
            _ => write!(f, "/({})", den.concat()),
        }
    }
}

impl fmt::Debug for FactoredRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for FactoredRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let factors: Vec<(JsonInt, JsonInt, i64)> = self
            .factors
            .iter()
            .map(|(r, &e)| (json_int(r.numer()), json_int(r.denom()), e))
            .collect();
        let mut st = s.serialize_struct("FactoredRational", 2)?;
        st.serialize_field("constant", &self.constant.to_string())?;
        st.serialize_field("factors", &factors)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn cancellation_is_canonical() {
        let a = FactoredRational::linear_power(rat(1, 2), 2);
        let b = FactoredRational::linear_power(rat(1, 2), -2);
        assert_eq!(&a * &b, FactoredRational::one());
        assert!((&a / &a).is_constant());
    }

    #[test]
    fn rendering() {
        let minus = FactoredRational::constant(int(-1));
        let f = &(&minus * &FactoredRational::linear_power(rat(1, 2), 1))
            * &FactoredRational::linear_power(rat(-1, 2), 1);
        assert_eq!(f.to_string(), "-(u-1/2)(u+1/2)");

        let g = &(&FactoredRational::linear_power(int(0), 2)
            * &FactoredRational::constant(rat(3, 2)))
            / &FactoredRational::linear_power(int(2), 1);
        assert_eq!(g.to_string(), "3/2*u^2/(u-2)");

        let h = FactoredRational::linear_power(int(-1), -3);
        assert_eq!(h.to_string(), "1/((u+1)^3)");
        assert_eq!(FactoredRational::linear_power(int(0), -1).to_string(), "1/u");
        assert_eq!(FactoredRational::constant(int(-1)).to_string(), "-1");
    }

    #[test]
    fn evaluation() {
        let f = &FactoredRational::linear_power(int(1), 2) / &FactoredRational::linear_power(int(3), 1);
        assert_eq!(f.eval(&int(2)), Some(int(-1)));
        assert_eq!(f.eval(&int(1)), Some(int(0)));
        assert_eq!(f.eval(&int(3)), None);
        assert_eq!(f.degree(), 1);
    }

    #[test]
    fn json_shape() {
        let f = &FactoredRational::constant(int(-1)) * &FactoredRational::linear_power(rat(-3, 2), -2);
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            r#"{"constant":"-1","factors":[[-3,2,-2]]}"#
        );
    }
}
