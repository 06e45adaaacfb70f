//! Central characters `C(u)|_{Δ(λ)}` and the central-equivalence relation.
//!
//! On a standard module the Jucys–Murphy type elements act by the shifted
//! contents, so `C(u)|_{Δ(λ)} = (1/2-u)(1/2+u) Π_{y∈λ} γ_{c_δ(y)}(u)` with
//! `γ_x(u) = ((u+x)²-1)/((u-x)²-1) · (u-x)²/(u+x)²`.

mod factored;
mod series;

use std::collections::BTreeMap;

pub use factored::FactoredRational;
pub use series::{
    brauer_gammas, check_admissible, check_lemma_o, first_admissibility_violation, o_series,
    o_series_from, TruncatedLaurent,
};

use crate::partitions::Partition;
use crate::rational::{int, rat, Rational};

pub fn gamma_factor(c: &Rational) -> FactoredRational {
    let one = int(1);
    let num = [(int(1) - c, 1), (-int(1) - c, 1), (c.clone(), 2)];
    let den = [(c + &one, 1), (c - &one, 1), (-c, 2)];
    num.into_iter()
        .map(|(r, e)| FactoredRational::linear_power(r, e))
        .chain(den.into_iter().map(|(r, e)| FactoredRational::linear_power(r, -e)))
        .fold(FactoredRational::one(), |acc, f| &acc * &f)
}

/// `(1/2-u)(1/2+u) = -(u-1/2)(u+1/2)`.
pub fn vacuum_character() -> FactoredRational {
    &(&FactoredRational::constant(int(-1)) * &FactoredRational::linear_power(rat(1, 2), 1))
        * &FactoredRational::linear_power(rat(-1, 2), 1)
}

pub fn central_character(lambda: &Partition, delta: &Rational) -> FactoredRational {
    lambda
        .contents(delta)
        .iter()
        .fold(vacuum_character(), |acc, c| &acc * &gamma_factor(c))
}

pub fn centrally_equivalent(lambda: &Partition, mu: &Partition, delta: &Rational) -> bool {
    central_character(lambda, delta) == central_character(mu, delta)
}

/// `Σ_a (zeros_a - poles_a) ω_a`, keyed by root.
pub fn weight_of_rational(f: &FactoredRational) -> BTreeMap<Rational, i64> {
    f.factors().map(|(r, e)| (r.clone(), e)).collect()
}
