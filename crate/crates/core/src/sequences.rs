//! Charged sequences `i_{d,λ} = (d-λ_1+1, d-λ_2+2, …)` and their orbits under
//! the type-D Weyl group `W_∞`.
//!
//! `W_∞` acts by permutations composed with an even number of sign changes.
//! Two sequences of one charge are in the same orbit iff their multisets of
//! absolute values agree and they have the same number of negative entries
//! mod 2; a zero entry frees the parity, since flipping 0 is invisible.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::partitions::Partition;

/// A strictly increasing sequence with tail `d + k`, stored as charge and shape.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChargedSequence {
    charge: HalfInt,
    shape: Partition,
}

impl ChargedSequence {
    pub fn new(shape: Partition, charge: HalfInt) -> Self {
        ChargedSequence { charge, shape }
    }

    /// The vacuum `(d+1, d+2, …)`.
    pub fn vacuum(charge: HalfInt) -> Self {
        Self::new(Partition::empty(), charge)
    }

    pub fn charge(&self) -> HalfInt {
        self.charge
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    /// `entry(k) = d - shape_k + k`, 1-based.
    pub fn entry(&self, k: usize) -> HalfInt {
        self.charge.shift(k as i64 - self.shape.part(k) as i64)
    }

    /// Entries `1..=n`.
    pub fn window(&self, n: usize) -> Vec<HalfInt> {
        (1..=n).map(|k| self.entry(k)).collect()
    }

    /// Index `k` with `entry(k) = value`, if any.
    pub fn position(&self, value: HalfInt) -> Option<usize> {
        let offset = value - self.charge;
        if !offset.is_integer() {
            return None;
        }
        let len = self.shape.len();
        let tail = offset.twice() / 2;
        if tail > len as i64 {
            return Some(tail as usize);
        }
        (1..=len).find(|&k| self.entry(k) == value)
    }

    /// Rebuilds a sequence from its first entries; beyond them the tail is
    /// `d + k`. Returns `None` unless the entries are strictly increasing and
    /// join the tail.
    pub fn from_window(charge: HalfInt, entries: &[HalfInt]) -> Option<Self> {
        let n = entries.len();
        let mut parts = Vec::with_capacity(n);
        for (idx, &e) in entries.iter().enumerate() {
            let k = idx as i64 + 1;
            let diff = charge.shift(k) - e;
            if !diff.is_integer() || diff.is_negative() {
                return None;
            }
            parts.push((diff.twice() / 2) as usize);
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return None;
        }
        if let Some(&last) = entries.last() {
            if last >= charge.shift(n as i64 + 1) {
                return None;
            }
        }
        Partition::new(parts).ok().map(|shape| Self::new(shape, charge))
    }

    /// Number of negative entries (finitely many, because of the tail).
    pub fn negative_count(&self) -> usize {
        let len = self.shape.len();
        let window = (1..=len).filter(|&k| self.entry(k).is_negative()).count();
        let tail = (len + 1..)
            .take_while(|&k| self.charge.shift(k as i64).is_negative())
            .count();
        window + tail
    }

    pub fn has_zero_entry(&self) -> bool {
        self.position(HalfInt::ZERO).is_some()
    }

    /// Multiset of `|entry(k)|` for `k ≤ n`.
    pub fn abs_window(&self, n: usize) -> BTreeMap<HalfInt, usize> {
        let mut out = BTreeMap::new();
        for k in 1..=n {
            *out.entry(self.entry(k).abs()).or_insert(0) += 1;
        }
        out
    }
}

impl fmt::Debug for ChargedSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shown: Vec<String> = self
            .window(self.shape.len() + 3)
            .iter()
            .map(|e| e.to_string())
            .collect();
        write!(f, "[d={}; {}, …]", self.charge, shown.join(", "))
    }
}

impl Serialize for ChargedSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ChargedSequence", 2)?;
        st.serialize_field("twiceCharge", &self.charge.twice())?;
        st.serialize_field("shape", &self.shape)?;
        st.end()
    }
}

pub fn make_sequence(lambda: &Partition, charge: HalfInt) -> ChargedSequence {
    ChargedSequence::new(lambda.clone(), charge)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum NegParity {
    Even,
    Odd,
    /// A zero entry is present, so parity is not an invariant.
    Any,
}

impl NegParity {
    fn of(seq: &ChargedSequence) -> Self {
        if seq.has_zero_entry() {
            NegParity::Any
        } else if seq.negative_count().is_multiple_of(2) {
            NegParity::Even
        } else {
            NegParity::Odd
        }
    }
}

impl Serialize for NegParity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            NegParity::Even => s.serialize_u8(0),
            NegParity::Odd => s.serialize_u8(1),
            NegParity::Any => s.serialize_str("*"),
        }
    }
}

/// Canonical `W_∞`-orbit invariant of a charged sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrbitKey {
    pub charge: HalfInt,
    /// Multiplicity of each absolute value minus its multiplicity in the vacuum.
    pub dev_map: BTreeMap<HalfInt, i64>,
    pub neg_parity: NegParity,
}

impl Serialize for OrbitKey {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let dev: Vec<[i64; 2]> = self.dev_map.iter().map(|(v, &c)| [v.twice(), c]).collect();
        let mut st = s.serialize_struct("OrbitKey", 3)?;
        st.serialize_field("twiceCharge", &self.charge.twice())?;
        st.serialize_field("devMap", &dev)?;
        st.serialize_field("negParity", &self.neg_parity)?;
        st.end()
    }
}

pub fn orbit_key(s: &ChargedSequence) -> OrbitKey {
    let mut dev_map = BTreeMap::new();
    for k in 1..=s.shape().len() {
        *dev_map.entry(s.entry(k).abs()).or_insert(0i64) += 1;
        *dev_map.entry(s.charge().shift(k as i64).abs()).or_insert(0) -= 1;
    }
    dev_map.retain(|_, c| *c != 0);
    OrbitKey {
        charge: s.charge(),
        dev_map,
        neg_parity: NegParity::of(s),
    }
}

/// Decides `t ∈ W_∞ · s` by comparing the two sequences directly over the
/// longer of their windows.
pub fn same_orbit(s: &ChargedSequence, t: &ChargedSequence) -> Result<bool> {
    if s.charge() != t.charge() {
        return Err(Error::ChargeMismatch {
            lhs: s.charge().to_string(),
            rhs: t.charge().to_string(),
        });
    }
    let n = s.shape().len().max(t.shape().len());
    if s.abs_window(n) != t.abs_window(n) {
        return Ok(false);
    }
    if s.has_zero_entry() {
        return Ok(true);
    }
    Ok(s.negative_count() % 2 == t.negative_count() % 2)
}
