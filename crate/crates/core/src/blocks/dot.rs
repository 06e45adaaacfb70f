//! Brute-force dot-action orbits of the type-D Weyl group `W_n`.
//!
//! `w.λ = w(λ+ρ_n) - ρ_n` with `ρ_n = Σ (1-i-δ/2) δ_i`, so membership is
//! decided on the shifted vectors `λ + ρ_n`. `W_n` is generated by the
//! adjacent swaps `s_1, …, s_{n-1}` and by `s_0`, which swaps and negates the
//! first two coordinates. Vectors are stored as twice their values.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Largest rank explored unless the caller raises the cap; `|W_8| ≈ 5.2M`.
pub const DEFAULT_RANK_CAP: usize = 8;

/// Coordinates of `λ + ρ_n`, each stored doubled.
pub type DotVector = Vec<i64>;

pub fn dot_vector(lambda: &Partition, n: usize, delta: i64) -> Result<DotVector> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsRank {
            partition: format!("{lambda:?}"),
            n,
        });
    }
    Ok((1..=n)
        .map(|i| 2 * lambda.part(i) as i64 + 2 - 2 * i as i64 - delta)
        .collect())
}

fn neighbours(v: &[i64]) -> impl Iterator<Item = DotVector> + '_ {
    let n = v.len();
    let s0 = (n >= 2).then(|| {
        let mut w = v.to_vec();
        w[0] = -v[1];
        w[1] = -v[0];
        w
    });
    let swaps = (1..n).map(move |i| {
        let mut w = v.to_vec();
        w.swap(i - 1, i);
        w
    });
    s0.into_iter().chain(swaps)
}

fn explore(start: DotVector, target: Option<&DotVector>) -> (HashSet<DotVector>, bool) {
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    if target == Some(&start) {
        return (seen, true);
    }
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(v) = queue.pop_front() {
        for w in neighbours(&v) {
            if seen.contains(&w) {
                continue;
            }
            if target == Some(&w) {
                return (seen, true);
            }
            seen.insert(w.clone());
            queue.push_back(w);
        }
    }
    (seen, false)
}

fn check_rank(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::RankCap { n, cap })
    } else {
        Ok(())
    }
}

/// The full orbit `W_n · (a + ρ_n)`.
pub fn dot_orbit(a: &Partition, n: usize, delta: i64, cap: usize) -> Result<HashSet<DotVector>> {
    check_rank(n, cap)?;
    Ok(explore(dot_vector(a, n, delta)?, None).0)
}

/// Whether `b + ρ_n ∈ W_n · (a + ρ_n)`. `a` and `b` are shapes of charged
/// sequences (the `λ^t`-level labels), not simple-module labels.
pub fn dot_orbit_member(a: &Partition, b: &Partition, n: usize, delta: i64, cap: usize) -> Result<bool> {
    check_rank(n, cap)?;
    let start = dot_vector(a, n, delta)?;
    let target = dot_vector(b, n, delta)?;
    Ok(explore(start, Some(&target)).1)
}
