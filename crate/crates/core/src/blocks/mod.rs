//! Block classification for `B(δ)`-lfdmod.
//!
//! Public operations take the labels λ of the simple modules `L(λ)` and pass
//! to `λ^t` internally: `L(λ)` and `L(μ)` share a block iff the charged
//! sequences of `λ^t` and `μ^t` at charge `d = δ/2 - 1` lie in one
//! `W_∞`-orbit. For `δ ∉ ℤ` the category is semisimple and every block is a
//! single simple module.
//!
//! The dot-action oracle in [`dot`] works on `λ^t`-level labels directly.

pub mod dot;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::partitions::{enumerate_partitions, partitions_of, Partition};
use crate::rational::{as_integer, Rational};
use crate::sequences::{make_sequence, orbit_key, same_orbit, ChargedSequence, OrbitKey};

pub use dot::{dot_orbit, dot_orbit_member, dot_vector, DotVector, DEFAULT_RANK_CAP};

/// `d = δ/2 - 1`.
pub fn charge_for(delta: i64) -> HalfInt {
    HalfInt::from_twice(delta - 2)
}

/// The charged sequence `i_{d,λ^t}` attached to the simple module `L(λ)`.
pub fn module_sequence(lambda: &Partition, delta: i64) -> ChargedSequence {
    make_sequence(&lambda.transpose(), charge_for(delta))
}

fn block_delta(delta: &Rational) -> Result<i64> {
    as_integer(delta).ok_or_else(|| Error::NonIntegralBlockDelta(delta.to_string()))
}

pub fn same_block(lambda: &Partition, mu: &Partition, delta: &Rational) -> bool {
    match as_integer(delta) {
        Some(d) => same_block_int(lambda, mu, d),
        None => lambda == mu,
    }
}

pub fn same_block_int(lambda: &Partition, mu: &Partition, delta: i64) -> bool {
    if lambda.size() % 2 != mu.size() % 2 {
        return false;
    }
    same_orbit(&module_sequence(lambda, delta), &module_sequence(mu, delta))
        .expect("both sequences share the charge δ/2 - 1")
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BlockKey {
    pub delta: i64,
    #[serde(flatten)]
    pub orbit: OrbitKey,
}

pub fn block_key(lambda: &Partition, delta: &Rational) -> Result<BlockKey> {
    Ok(block_key_int(lambda, block_delta(delta)?))
}

pub fn block_key_int(lambda: &Partition, delta: i64) -> BlockKey {
    BlockKey {
        delta,
        orbit: orbit_key(&module_sequence(lambda, delta)),
    }
}

/// Why two labels do or do not share a block.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BlockReason {
    pub abs_multiset_equal: bool,
    pub parity_lhs: usize,
    pub parity_rhs: usize,
    pub zero_entry: bool,
}

pub fn block_reason(lambda: &Partition, mu: &Partition, delta: i64) -> BlockReason {
    let s = module_sequence(lambda, delta);
    let t = module_sequence(mu, delta);
    let n = s.shape().len().max(t.shape().len());
    BlockReason {
        abs_multiset_equal: s.abs_window(n) == t.abs_window(n),
        parity_lhs: s.negative_count() % 2,
        parity_rhs: t.negative_count() % 2,
        zero_entry: s.has_zero_entry() || t.has_zero_entry(),
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum BlockClassification {
    /// The bar-weight class of λ is one block.
    Single,
    /// The class splits into two blocks; `partner` lies in the other one.
    Split { partner: Partition },
}

pub fn classify_weight_class(lambda: &Partition, delta: &Rational) -> Result<BlockClassification> {
    Ok(classify_weight_class_int(lambda, block_delta(delta)?))
}

pub fn classify_weight_class_int(lambda: &Partition, delta: i64) -> BlockClassification {
    if delta.rem_euclid(2) == 1 {
        return BlockClassification::Single;
    }
    let seq = module_sequence(lambda, delta);
    if seq.has_zero_entry() {
        return BlockClassification::Single;
    }
    let partner = reflected_partner(&seq).transpose();
    BlockClassification::Split { partner }
}

/// `(-i_k, i_1, …, i_{k-1}, i_{k+1}, …)` for the smallest tail index `k`
/// that keeps the result strictly increasing. Needs an integral charge and
/// no zero entry.
fn reflected_partner(seq: &ChargedSequence) -> Partition {
    let first = seq.entry(1);
    let k = (seq.shape().len() + 1..)
        .find(|&k| {
            let e = seq.entry(k);
            e.is_positive() && -e < first
        })
        .expect("tail entries grow without bound");
    let mut entries = Vec::with_capacity(k);
    entries.push(-seq.entry(k));
    entries.extend(seq.window(k - 1));
    ChargedSequence::from_window(seq.charge(), &entries)
        .expect("reflected sequence stays strictly increasing")
        .into_shape()
}

/// All μ with `|μ| ≤ max_size` in the block of `L(λ)`, in partition order.
pub fn enumerate_block_members(lambda: &Partition, delta: &Rational, max_size: usize) -> Vec<Partition> {
    let Some(d) = as_integer(delta) else {
        return if lambda.size() <= max_size {
            vec![lambda.clone()]
        } else {
            Vec::new()
        };
    };
    let key = block_key_int(lambda, d);
    let parity = lambda.size() % 2;
    let mut out: Vec<Partition> = (0..=max_size)
        .filter(|n| n % 2 == parity)
        .flat_map(partitions_of)
        .collect::<Vec<_>>()
        .into_par_iter()
        .filter(|mu| block_key_int(mu, d) == key)
        .collect();
    out.sort();
    out
}

/// Blocks of the Brauer algebra `B_n(δ)`: labels of sizes `n, n-2, …`,
/// grouped by block. Groups are ordered by their smallest member.
pub fn brauer_algebra_blocks(n: usize, delta: i64) -> Vec<Vec<Partition>> {
    let labels: Vec<Partition> = enumerate_partitions(n)
        .into_iter()
        .filter(|p| p.size() % 2 == n % 2)
        .collect();
    let keys: Vec<BlockKey> = labels.par_iter().map(|p| block_key_int(p, delta)).collect();
    let mut groups: Vec<(BlockKey, Vec<Partition>)> = Vec::new();
    for (label, key) in labels.into_iter().zip(keys) {
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(label),
            None => groups.push((key, vec![label])),
        }
    }
    groups.into_iter().map(|(_, members)| members).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::sequences::NegParity;
    use crate::weights::same_bar_weight_int;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn same_block_examples() {
        let e = Partition::empty();
        assert!(same_block(&e, &p(&[2, 2, 2]), &int(2)));
        assert!(!same_block(&e, &p(&[1, 1]), &int(2)));
        assert!(same_block(&p(&[3, 1]), &p(&[3, 1]), &int(-3)));
        assert!(!same_block(&p(&[2, 2]), &p(&[2, 1]), &int(1)));
    }

    #[test]
    fn semisimple_delta_separates_everything() {
        let d = rat(5, 2);
        assert!(!same_block(&Partition::empty(), &p(&[2, 2, 2]), &d));
        assert!(same_block(&p(&[2, 1]), &p(&[2, 1]), &d));
        assert_eq!(enumerate_block_members(&p(&[1]), &d, 6), vec![p(&[1])]);
        assert!(block_key(&p(&[1]), &d).is_err());
    }

    #[test]
    fn block_key_examples() {
        let k0 = block_key(&Partition::empty(), &int(2)).unwrap();
        assert!(k0.orbit.dev_map.is_empty());
        assert_eq!(k0.orbit.neg_parity, NegParity::Even);
        assert_eq!(block_key(&p(&[2, 2, 2]), &int(2)).unwrap(), k0);
        let k = block_key(&p(&[1, 1]), &int(2)).unwrap();
        assert!(k.orbit.dev_map.is_empty());
        assert_eq!(k.orbit.neg_parity, NegParity::Odd);
        let err = block_key(&p(&[1]), &rat(1, 2)).unwrap_err();
        assert!(err.to_string().contains("block keys require integral δ"));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_weight_class(&Partition::empty(), &int(2)).unwrap(),
            BlockClassification::Split { partner: p(&[1, 1]) }
        );
        assert_eq!(
            classify_weight_class(&p(&[1]), &int(1)).unwrap(),
            BlockClassification::Single
        );
        assert_eq!(
            classify_weight_class(&Partition::empty(), &int(0)).unwrap(),
            BlockClassification::Single
        );
    }

    #[test]
    fn partner_postconditions_small() {
        for delta in [-4, -2, 0, 2, 4] {
            for lambda in enumerate_partitions(6) {
                if let BlockClassification::Split { partner } = classify_weight_class_int(&lambda, delta) {
                    assert!(same_bar_weight_int(&lambda, &partner, delta), "{lambda:?} δ={delta}");
                    assert!(!same_block_int(&lambda, &partner, delta), "{lambda:?} δ={delta}");
                }
            }
        }
    }

    #[test]
    fn enumerate_examples() {
        let e = Partition::empty();
        assert_eq!(enumerate_block_members(&e, &int(2), 6), vec![e.clone(), p(&[2, 2, 2])]);
        assert_eq!(enumerate_block_members(&e, &int(2), 5), vec![e.clone()]);
        assert_eq!(enumerate_block_members(&e, &int(0), 2), vec![e.clone(), p(&[2])]);
    }

    #[test]
    fn brauer_block_examples() {
        assert_eq!(
            brauer_algebra_blocks(2, 2),
            vec![vec![Partition::empty()], vec![p(&[2])], vec![p(&[1, 1])]]
        );
        assert_eq!(
            brauer_algebra_blocks(2, 0),
            vec![vec![Partition::empty(), p(&[2])], vec![p(&[1, 1])]]
        );
        assert_eq!(brauer_algebra_blocks(1, 7), vec![vec![p(&[1])]]);
        assert_eq!(brauer_algebra_blocks(0, -3), vec![vec![Partition::empty()]]);
    }

    #[test]
    fn reason_fields() {
        let r = block_reason(&Partition::empty(), &p(&[1, 1]), 2);
        assert_eq!(
            r,
            BlockReason {
                abs_multiset_equal: true,
                parity_lhs: 0,
                parity_rhs: 1,
                zero_entry: false
            }
        );
    }
}
