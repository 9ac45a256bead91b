//! Integer partitions and the strip predicates used by the Pieri-type
//! expansions.
//!
//! Partitions are ordered first by size and then reverse lexicographically,
//! so `[] < [1] < [2] < [1,1] < [3] < [2,1] < [1,1,1] < ...`. Every table in
//! the crate iterates in this order.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The unique partition of zero.
    pub const fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, dropping trailing zeros. Fails if the parts are
    /// not weakly decreasing or a zero is followed by a positive part.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(alloc::format!(
                "parts {:?} are not a partition",
                parts
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Multiplicity of `k` as a part.
    pub fn multiplicity(&self, k: usize) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Whether the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Partition {
        let cols = self.first();
        let parts = (0..cols)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// `outer / inner` is a horizontal strip: `outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...`.
    pub fn is_horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
        if inner.len() > outer.len() {
            return false;
        }
        (0..outer.len()).all(|i| outer.part(i) >= inner.part(i) && inner.part(i) >= outer.part(i + 1))
    }

    /// `outer / inner` has at most one cell in each row.
    pub fn is_vertical_strip(outer: &Partition, inner: &Partition) -> bool {
        outer.contains(inner)
            && (0..outer.len()).all(|i| outer.part(i) - inner.part(i) <= 1)
    }

    /// The padded partition `(t - |nu|, nu_1, nu_2, ...)` of `t`.
    pub fn pad(&self, t: usize) -> Result<Partition> {
        let needed = self.first() + self.size();
        if t < needed {
            return Err(Error::PadTooSmall { nu: self.clone(), t, needed });
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(t - self.size());
        parts.extend_from_slice(&self.parts);
        Ok(Partition::new(parts).expect("padded partition is weakly decreasing"))
    }

    /// Removes the first part; inverse of [`Partition::pad`].
    pub fn tail(&self) -> Partition {
        Partition { parts: self.parts.iter().skip(1).copied().collect() }
    }

    /// All `inner` with `self / inner` a horizontal strip, in canonical order.
    pub fn horizontal_strip_inner(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(self.len());
        fn rec(outer: &Partition, i: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(current.clone()).expect("interlacing parts"));
                return;
            }
            for v in outer.part(i + 1)..=outer.part(i) {
                current.push(v);
                rec(outer, i + 1, current, out);
                current.pop();
            }
        }
        rec(self, 0, &mut current, &mut out);
        out.sort();
        out
    }

    /// All `inner` with `self / inner` a vertical strip, in canonical order.
    pub fn vertical_strip_inner(&self) -> Vec<Partition> {
        let mut out: Vec<Partition> = self
            .transpose()
            .horizontal_strip_inner()
            .iter()
            .map(Partition::transpose)
            .collect();
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", p)?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[4,2,1]`; whitespace is ignored and `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(alloc::format!("malformed partition {:?}", s));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(bad());
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for building partitions from literals in tests and tables.
///
/// Panics if the parts are not weakly decreasing.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("literal partition")
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of size at most `n`, in canonical order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}
