//! The charge-`d` sector of the semi-infinite wedge space, with the
//! Chevalley generators `e_i`, `f_i` and the symmetric-pair generators
//! `b_i = e_i + f_{-i}`.
//!
//! A basis vector `w_i` is a charged sequence. `e_i` moves the entry `i-1/2`
//! to `i+1/2`, `f_i` moves `i+1/2` to `i-1/2`; a move onto an occupied entry
//! gives zero. Only unit steps occur, so no wedge reordering signs arise.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::partitions::Partition;
use crate::rational::{json_int, Rational};
use crate::sequences::ChargedSequence;
use crate::weights::{in_index_set, RootVector};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WedgeVector {
    charge: HalfInt,
    terms: BTreeMap<Partition, Rational>,
}

impl WedgeVector {
    pub fn zero(charge: HalfInt) -> Self {
        WedgeVector {
            charge,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(seq: &ChargedSequence) -> Self {
        let mut v = Self::zero(seq.charge());
        v.terms.insert(seq.shape().clone(), Rational::one());
        v
    }

    pub fn charge(&self) -> HalfInt {
        self.charge
    }

    /// The sector's δ, from `d = δ/2 - 1`.
    pub fn delta(&self) -> i64 {
        self.charge.twice() + 2
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, shape: &Partition) -> Rational {
        self.terms.get(shape).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms as (basis sequence, coefficient), sorted by shape.
    pub fn terms(&self) -> impl Iterator<Item = (ChargedSequence, &Rational)> + '_ {
        self.terms
            .iter()
            .map(|(shape, c)| (ChargedSequence::new(shape.clone(), self.charge), c))
    }

    pub fn add_term(&mut self, shape: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(shape.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&shape);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.charge);
        for (shape, x) in &self.terms {
            out.add_term(shape.clone(), x * c);
        }
        out
    }

    pub fn add(&self, other: &WedgeVector) -> Self {
        assert_eq!(self.charge, other.charge, "wedge vectors from different sectors");
        let mut out = self.clone();
        for (shape, c) in &other.terms {
            out.add_term(shape.clone(), c.clone());
        }
        out
    }

    fn check_index(&self, i: HalfInt) -> Result<()> {
        let delta = self.delta();
        if in_index_set(i, delta) {
            Ok(())
        } else {
            Err(Error::IndexParity {
                index: i.to_string(),
                delta,
            })
        }
    }

    fn map_basis(&self, step: impl Fn(&ChargedSequence) -> Option<ChargedSequence>) -> Self {
        let mut out = Self::zero(self.charge);
        for (seq, c) in self.terms() {
            if let Some(image) = step(&seq) {
                out.add_term(image.into_shape(), c.clone());
            }
        }
        out
    }
}

/// Moves the entry `from` to `to = from ± 1`; `None` when `from` is absent
/// or `to` is occupied.
fn move_entry(seq: &ChargedSequence, from: HalfInt, to: HalfInt) -> Option<ChargedSequence> {
    let k = seq.position(from)?;
    if seq.position(to).is_some() {
        return None;
    }
    let n = seq.shape().len().max(k) + 1;
    let mut entries = seq.window(n);
    entries[k - 1] = to;
    ChargedSequence::from_window(seq.charge(), &entries)
}

pub fn raise_basis(i: HalfInt, seq: &ChargedSequence) -> Option<ChargedSequence> {
    move_entry(seq, i - HalfInt::HALF, i + HalfInt::HALF)
}

pub fn lower_basis(i: HalfInt, seq: &ChargedSequence) -> Option<ChargedSequence> {
    move_entry(seq, i + HalfInt::HALF, i - HalfInt::HALF)
}

pub fn apply_raising(i: HalfInt, v: &WedgeVector) -> Result<WedgeVector> {
    v.check_index(i)?;
    Ok(v.map_basis(|s| raise_basis(i, s)))
}

pub fn apply_lowering(i: HalfInt, v: &WedgeVector) -> Result<WedgeVector> {
    v.check_index(i)?;
    Ok(v.map_basis(|s| lower_basis(i, s)))
}

/// `b_i = e_i + f_{-i}`.
pub fn apply_b(i: HalfInt, v: &WedgeVector) -> Result<WedgeVector> {
    Ok(apply_raising(i, v)?.add(&apply_lowering(-i, v)?))
}

/// `wt_d(s) - wt_d(vacuum)` in α-coordinates, where `wt_d(s) = -Σ ε_{s_k}`.
///
/// Row `k` contributes `ε_{d+k} - ε_{entry(k)}`, telescoped through
/// `ε_a - ε_{a+1} = α_{a+1/2}`.
pub fn relative_weight(s: &ChargedSequence) -> RootVector {
    let mut out = RootVector::new();
    for k in 1..=s.shape().len() {
        let mut c = s.entry(k);
        let top = s.charge().shift(k as i64);
        while c < top {
            out.add_to(c + HalfInt::HALF, -1);
            c = c.shift(1);
        }
    }
    out
}

struct JsonTerm<'a> {
    shape: &'a Partition,
    charge: HalfInt,
    coeff: &'a Rational,
}

impl Serialize for JsonTerm<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("WedgeTerm", 4)?;
        st.serialize_field("shape", self.shape)?;
        st.serialize_field("twiceCharge", &self.charge.twice())?;
        st.serialize_field("numerator", &json_int(self.coeff.numer()))?;
        st.serialize_field("denominator", &json_int(self.coeff.denom()))?;
        st.end()
    }
}

impl Serialize for WedgeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (shape, coeff) in &self.terms {
            seq.serialize_element(&JsonTerm {
                shape,
                charge: self.charge,
                coeff,
            })?;
        }
        seq.end()
    }
}
