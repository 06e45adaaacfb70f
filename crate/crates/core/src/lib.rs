//! Exact block classification for the Brauer category `B(δ)` over ℂ.
//!
//! Simple modules `L(λ)` are labelled by all partitions. This crate decides
//! when two of them share a block, enumerates blocks and Brauer-algebra
//! blocks, splits bar-weight classes, and computes central characters as
//! canonical factored rational functions. Each fast criterion has a
//! brute-force counterpart (the dot-action orbit search in
//! [`blocks::dot`], evaluation of factored forms at sample points) that the
//! test suites compare against.

pub mod blocks;
pub mod central;
pub mod error;
pub mod halfint;
pub mod partitions;
pub mod rational;
pub mod sequences;
pub mod wedge;
pub mod weights;

pub use blocks::{
    block_key, block_key_int, brauer_algebra_blocks, classify_weight_class, classify_weight_class_int,
    enumerate_block_members, same_block, same_block_int, BlockClassification, BlockKey,
};
pub use central::{central_character, centrally_equivalent, gamma_factor, FactoredRational, TruncatedLaurent};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use partitions::{enumerate_partitions, parse_partition, Partition};
pub use rational::{parse_rational, Rational};
pub use sequences::{make_sequence, orbit_key, same_orbit, ChargedSequence, NegParity, OrbitKey};
pub use wedge::WedgeVector;
pub use weights::{RootVector, SymWeight};
