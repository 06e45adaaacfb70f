//! Integer partitions, Young-diagram boxes and δ-shifted contents.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::rational::{int, Rational};

/// A weakly decreasing list of positive integers.
///
/// The `Ord` impl is the enumeration order used everywhere output must be
/// reproducible: by size, then lexicographically descending, so `(2)` sorts
/// before `(1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::PartitionParse {
                token: parts[pos].to_string(),
                reason: "parts must be positive".into(),
            });
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::PartitionParse {
                token: w[1].to_string(),
                reason: "not weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The `k`-th part (1-based), zero past the end.
    pub fn part(&self, k: usize) -> usize {
        k.checked_sub(1)
            .and_then(|i| self.parts.get(i))
            .copied()
            .unwrap_or(0)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// Boxes `(row, col)`, both 1-based, row by row.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Unshifted contents `col - row`, one per box.
    pub fn raw_contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.boxes().map(|(i, j)| j as i64 - i as i64)
    }

    /// `c_δ(x) = (δ-1)/2 + c(x)` for every box, for an arbitrary rational δ.
    pub fn contents(&self, delta: &Rational) -> Vec<Rational> {
        let base = (delta - int(1)) / int(2);
        self.raw_contents().map(|c| &base + int(c)).collect()
    }

    /// Shifted contents for integral δ; these lie in `(δ-1)/2 + ℤ`.
    pub fn shifted_contents(&self, delta: i64) -> Vec<HalfInt> {
        let base = HalfInt::from_twice(delta - 1);
        self.raw_contents().map(|c| base.shift(c)).collect()
    }

    /// Adds one box to row `k` (1-based), if the result is a partition.
    pub fn add_box(&self, k: usize) -> Option<Partition> {
        if k == 0 || k > self.len() + 1 {
            return None;
        }
        if k > 1 && self.part(k - 1) == self.part(k) {
            return None;
        }
        let mut parts = self.parts.clone();
        if k > parts.len() {
            parts.push(1);
        } else {
            parts[k - 1] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes one box from row `k` (1-based), if the result is a partition.
    pub fn remove_box(&self, k: usize) -> Option<Partition> {
        if k == 0 || k > self.len() || self.part(k + 1) == self.part(k) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[k - 1] -= 1;
        if parts[k - 1] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s)
    }
}

/// Comma-separated text, e.g. `2,1,1` or `[2,1,1]`; the empty string is ∅.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", text.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    let mut t = text.trim();
    for (open, close) in [('[', ']'), ('(', ')')] {
        if let Some(inner) = t.strip_prefix(open).and_then(|s| s.strip_suffix(close)) {
            t = inner.trim();
            break;
        }
    }
    if t.is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for token in t.split(',') {
        let token = token.trim();
        let bad = |reason: &str| Error::PartitionParse {
            token: token.to_string(),
            reason: reason.to_string(),
        };
        let value: i64 = token.parse().map_err(|_| bad("not an integer"))?;
        if value <= 0 {
            return Err(bad("parts must be positive"));
        }
        if parts.last().is_some_and(|&prev: &usize| prev < value as usize) {
            return Err(bad("not weakly decreasing"));
        }
        parts.push(value as usize);
    }
    Ok(Partition { parts })
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `max_size`, in `Partition`'s order.
pub fn enumerate_partitions(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}
