//! Truncated Laurent series in `u^{-1}` with a bounded number of positive
//! powers, used to check the `O(u)` identity and admissibility exactly.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, rat, Rational};

/// Coefficients of `u^top, u^{top-1}, …, u^{low}`; everything below `low`
/// is unknown, not zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedLaurent {
    top: i64,
    low: i64,
    coeffs: Vec<Rational>,
}

impl TruncatedLaurent {
    pub fn new(top: i64, coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least one known coefficient");
        let low = top - coeffs.len() as i64 + 1;
        TruncatedLaurent { top, low, coeffs }
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    /// Lowest degree whose coefficient is known.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Coefficient of `u^degree`: zero above the top, `None` below `low`.
    pub fn coeff(&self, degree: i64) -> Option<Rational> {
        if degree > self.top {
            Some(Rational::zero())
        } else if degree < self.low {
            None
        } else {
            Some(self.coeffs[(self.top - degree) as usize].clone())
        }
    }

    /// Substitutes `u ↦ -u`.
    pub fn reflect(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let degree = self.top - idx as i64;
                if degree.rem_euclid(2) == 1 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        TruncatedLaurent {
            top: self.top,
            low: self.low,
            coeffs,
        }
    }

    /// Product, keeping exactly the coefficients that both inputs determine.
    pub fn mul(&self, other: &Self) -> Self {
        let top = self.top + other.top;
        let low = (self.low + other.top).max(other.low + self.top);
        let coeffs = (low..=top)
            .rev()
            .map(|degree| {
                let mut acc = Rational::zero();
                for a in self.low..=self.top {
                    let b = degree - a;
                    if b < other.low || b > other.top {
                        continue;
                    }
                    acc += self.coeff(a).unwrap() * other.coeff(b).unwrap();
                }
                acc
            })
            .collect();
        TruncatedLaurent { top, low, coeffs }
    }
}

/// `γ_a = δ((δ-1)/2)^a` for `a = 0..=k`.
pub fn brauer_gammas(delta: &Rational, k: usize) -> Vec<Rational> {
    let ratio = (delta - int(1)) / int(2);
    let mut out = Vec::with_capacity(k + 1);
    let mut current = delta.clone();
    for _ in 0..=k {
        out.push(current.clone());
        current *= &ratio;
    }
    out
}

/// `u - 1/2 + Σ_{a=0}^{K} γ_a u^{-a}`.
pub fn o_series_from(gammas: &[Rational], k: usize) -> Result<TruncatedLaurent> {
    if gammas.len() < k + 1 {
        return Err(Error::InsufficientCoefficients {
            needed: k + 1,
            got: gammas.len(),
        });
    }
    let mut coeffs = Vec::with_capacity(k + 2);
    coeffs.push(Rational::one());
    coeffs.push(&gammas[0] - rat(1, 2));
    coeffs.extend(gammas[1..=k].iter().cloned());
    Ok(TruncatedLaurent::new(1, coeffs))
}

pub fn o_series(delta: &Rational, k: usize) -> TruncatedLaurent {
    o_series_from(&brauer_gammas(delta, k), k).expect("exactly K+1 coefficients")
}

/// Checks `O(u)O(-u) = 1/4 - u²` on every coefficient the truncated product
/// determines (degrees `2` down to `1-K`).
pub fn check_lemma_o(gammas: &[Rational], k: usize) -> Result<bool> {
    let o = o_series_from(gammas, k)?;
    let product = o.mul(&o.reflect());
    Ok((product.low()..=product.top()).all(|degree| {
        let expected = match degree {
            2 => int(-1),
            0 => rat(1, 4),
            _ => Rational::zero(),
        };
        product.coeff(degree) == Some(expected)
    }))
}

/// Index of the first odd `k ≤ K` where `2γ_k = -γ_{k-1} + Σ_{j=1}^{k}
/// (-1)^{j-1} γ_{j-1} γ_{k-j}` fails.
pub fn first_admissibility_violation(gammas: &[Rational], k: usize) -> Result<Option<usize>> {
    if gammas.len() < k + 1 {
        return Err(Error::InsufficientCoefficients {
            needed: k + 1,
            got: gammas.len(),
        });
    }
    for odd in (1..=k).step_by(2) {
        let mut rhs = -gammas[odd - 1].clone();
        for j in 1..=odd {
            let term = &gammas[j - 1] * &gammas[odd - j];
            if j % 2 == 1 {
                rhs += term;
            } else {
                rhs -= term;
            }
        }
        if &gammas[odd] * int(2) != rhs {
            return Ok(Some(odd));
        }
    }
    Ok(None)
}

pub fn check_admissible(gammas: &[Rational], k: usize) -> Result<bool> {
    Ok(first_admissibility_violation(gammas, k)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn o_series_examples() {
        let s = o_series(&int(1), 5);
        assert_eq!(s.coeff(1), Some(int(1)));
        assert_eq!(s.coeff(0), Some(rat(1, 2)));
        for d in -5..0 {
            assert_eq!(s.coeff(d), Some(int(0)));
        }
        assert_eq!(s.coeff(-6), None);

        let s = o_series(&int(3), 3);
        let got: Vec<_> = (-3..=1).rev().map(|d| s.coeff(d).unwrap()).collect();
        assert_eq!(got, vec![int(1), rat(5, 2), int(3), int(3), int(3)]);

        for delta in [rat(-7, 3), int(0), int(4)] {
            assert_eq!(o_series(&delta, 2).coeff(0), Some(&delta - rat(1, 2)));
        }
    }

    #[test]
    fn product_precision() {
        let a = TruncatedLaurent::new(1, vec![int(1), int(2), int(3)]);
        let p = a.mul(&a);
        assert_eq!((p.top(), p.low()), (2, 0));
        // (u + 2 + 3/u + ?)^2 = u^2 + 4u + (4 + 6) + …
        assert_eq!(p.coeff(2), Some(int(1)));
        assert_eq!(p.coeff(1), Some(int(4)));
        assert_eq!(p.coeff(0), Some(int(10)));
        assert_eq!(p.coeff(-1), None);
    }

    #[test]
    fn lemma_o_examples() {
        assert!(check_lemma_o(&brauer_gammas(&int(3), 20), 20).unwrap());
        assert!(check_lemma_o(&brauer_gammas(&int(1), 20), 20).unwrap());
        let mut bad = brauer_gammas(&int(3), 20);
        bad[1] = int(0);
        assert!(!check_lemma_o(&bad, 20).unwrap());
        assert!(matches!(
            check_lemma_o(&[int(1)], 3),
            Err(Error::InsufficientCoefficients { needed: 4, got: 1 })
        ));
    }

    #[test]
    fn admissibility_examples() {
        assert!(check_admissible(&brauer_gammas(&int(3), 19), 19).unwrap());
        let mut bad = brauer_gammas(&int(3), 5);
        bad[1] = int(1);
        assert_eq!(first_admissibility_violation(&bad, 5).unwrap(), Some(1));
        assert!(check_admissible(&vec![int(0); 8], 7).unwrap());
        assert!(check_admissible(&[], 0).is_err());
    }
}
