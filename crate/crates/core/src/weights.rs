//! Root-lattice coordinates of `wt(λ)` and their classes modulo `Q^θ`.
//!
//! `wt(λ) = ω_{(δ-1)/2} - Σ_{x∈λ} α_{c_δ(x)}`. The fundamental weight is the
//! same for every λ at fixed δ, so only the box count per root index is kept.
//! `Q^θ` is spanned by `α_i + α_{-i}` for `i > 0` and by `2α_0` when `0 ∈ I`.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::partitions::Partition;
use crate::rational::{as_integer, Rational};

/// Finitely supported integer combination of simple roots `α_i`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct RootVector {
    coeffs: BTreeMap<HalfInt, i64>,
}

impl RootVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (HalfInt, i64)>) -> Self {
        let mut v = Self::new();
        for (i, c) in pairs {
            v.add_to(i, c);
        }
        v
    }

    pub fn get(&self, i: HalfInt) -> i64 {
        self.coeffs.get(&i).copied().unwrap_or(0)
    }

    pub fn add_to(&mut self, i: HalfInt, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&i);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (HalfInt, i64)> + '_ {
        self.coeffs.iter().map(|(&i, &c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Sum of all coefficients; every generator of `Q^θ` has total 2.
    pub fn total(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// The single root `α_i`.
    pub fn alpha(i: HalfInt) -> Self {
        Self::from_pairs([(i, 1)])
    }
}

impl Add for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        let mut out = self.clone();
        for (i, c) in rhs.iter() {
            out.add_to(i, c);
        }
        out
    }
}

impl Sub for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        let mut out = self.clone();
        for (i, c) in rhs.iter() {
            out.add_to(i, -c);
        }
        out
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector::from_pairs(self.iter().map(|(i, c)| (i, -c)))
    }
}

impl Serialize for RootVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.iter().map(|(i, c)| [i.twice(), c]).collect();
        pairs.serialize(s)
    }
}

/// Canonical image of a [`RootVector`] in `Q/Q^θ`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct SymWeight {
    /// `v_i - v_{-i}` for `i > 0`, nonzero entries only.
    pub pos_part: BTreeMap<HalfInt, i64>,
    /// `v_0 mod 2`; present iff `0 ∈ I`.
    pub zero_parity: Option<u8>,
}

impl SymWeight {
    pub fn is_zero(&self) -> bool {
        self.pos_part.is_empty() && self.zero_parity.unwrap_or(0) == 0
    }
}

impl Add for &SymWeight {
    type Output = SymWeight;
    fn add(self, rhs: &SymWeight) -> SymWeight {
        let mut pos_part = self.pos_part.clone();
        for (&i, &c) in &rhs.pos_part {
            let e = pos_part.entry(i).or_insert(0);
            *e += c;
            if *e == 0 {
                pos_part.remove(&i);
            }
        }
        let zero_parity = match (self.zero_parity, rhs.zero_parity) {
            (None, None) => None,
            (a, b) => Some((a.unwrap_or(0) + b.unwrap_or(0)) % 2),
        };
        SymWeight {
            pos_part,
            zero_parity,
        }
    }
}

impl Serialize for SymWeight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self.pos_part.iter().map(|(i, &c)| [i.twice(), c]).collect();
        let mut st = s.serialize_struct("SymWeight", 2)?;
        st.serialize_field("posPart", &pairs)?;
        st.serialize_field("zeroParity", &self.zero_parity)?;
        st.end()
    }
}

/// Integral δ, or the weights error.
pub fn integral_delta(delta: &Rational) -> Result<i64> {
    as_integer(delta).ok_or_else(|| Error::NonIntegralWeightDelta(delta.to_string()))
}

/// Whether `i` lies in `I = (δ-1)/2 + ℤ`.
pub fn in_index_set(i: HalfInt, delta: i64) -> bool {
    (i.twice() - (delta - 1)).rem_euclid(2) == 0
}

/// Box counts per shifted content: the α-part of `wt(λ)` with its sign dropped.
pub fn alpha_part(lambda: &Partition, delta: i64) -> RootVector {
    RootVector::from_pairs(lambda.shifted_contents(delta).into_iter().map(|c| (c, 1)))
}

pub fn weight_alpha_part(lambda: &Partition, delta: &Rational) -> Result<RootVector> {
    Ok(alpha_part(lambda, integral_delta(delta)?))
}

pub fn reduce_mod_qtheta(v: &RootVector, delta: i64) -> Result<SymWeight> {
    let mut pos_part = BTreeMap::new();
    let mut zero = 0i64;
    for (i, c) in v.iter() {
        if !in_index_set(i, delta) {
            return Err(Error::IndexParity {
                index: i.to_string(),
                delta,
            });
        }
        if i.is_positive() {
            *pos_part.entry(i).or_insert(0) += c;
        } else if i.is_negative() {
            *pos_part.entry(-i).or_insert(0) -= c;
        } else {
            zero += c;
        }
    }
    pos_part.retain(|_, c| *c != 0);
    let zero_parity = (delta.rem_euclid(2) == 1).then_some(zero.rem_euclid(2) as u8);
    Ok(SymWeight {
        pos_part,
        zero_parity,
    })
}

/// The class of `wt(λ) - ω_{(δ-1)/2}` in `P_θ`.
pub fn bar_weight(lambda: &Partition, delta: i64) -> SymWeight {
    reduce_mod_qtheta(&-&alpha_part(lambda, delta), delta)
        .expect("contents always lie in the index set")
}

pub fn same_bar_weight(lambda: &Partition, mu: &Partition, delta: &Rational) -> Result<bool> {
    let delta = integral_delta(delta)?;
    Ok(same_bar_weight_int(lambda, mu, delta))
}

pub fn same_bar_weight_int(lambda: &Partition, mu: &Partition, delta: i64) -> bool {
    let diff = &alpha_part(lambda, delta) - &alpha_part(mu, delta);
    reduce_mod_qtheta(&diff, delta)
        .expect("contents always lie in the index set")
        .is_zero()
}

/// Integer combination of fundamental weights `ω_i`.
pub type OmegaMap = BTreeMap<HalfInt, i64>;

/// `α_i = 2ω_i - ω_{i-1} - ω_{i+1}`.
pub fn alpha_in_omega(i: HalfInt) -> OmegaMap {
    OmegaMap::from([(i, 2), (i.shift(-1), -1), (i.shift(1), -1)])
}

/// `a - b` on ω-maps, dropping zeros.
pub fn omega_sub(a: &OmegaMap, b: &OmegaMap) -> OmegaMap {
    let mut out = a.clone();
    for (&k, &v) in b {
        *out.entry(k).or_insert(0) -= v;
    }
    out.retain(|_, v| *v != 0);
    out
}
