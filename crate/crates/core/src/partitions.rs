//! Integer partitions, the index set of the power-sum basis.
//!
//! Two orders are in play. [`partitions_of`] lists the partitions of `n` in
//! reverse lexicographic order, `(4), (3,1), (2,2), (2,1,1), (1,1,1,1)`. The
//! [`Ord`] impl on [`Partition`] is graded lexicographic: smaller sizes first,
//! then ascending lexicographic comparison of the parts, so that `(1,1)` sorts
//! before `(2)`. Series keyed by partitions iterate and render in that order.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that are already positive and weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.last() == Some(&0) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    ///
    /// Panics if any part is zero.
    pub fn from_parts(parts: impl IntoIterator<Item = usize>) -> Self {
        let mut parts: Vec<usize> = parts.into_iter().collect();
        assert!(parts.iter().all(|&p| p > 0), "partition parts must be positive");
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// The empty partition of 0.
    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Pairs `(i, mᵢ)` of each distinct part and its multiplicity, largest
    /// part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiplies every part by `k`: the index of `p_k[p_λ]`.
    pub fn scaled(&self, k: usize) -> Self {
        assert!(k > 0, "scale factor must be positive");
        Partition {
            parts: self.parts.iter().map(|&p| p * k).collect(),
        }
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.parts.cmp(&other.parts))
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
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            go(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }

    let mut out = Vec::new();
    go(n, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `z_λ = ∏ i^{mᵢ} mᵢ!`, the order of the centralizer of a permutation of
/// cycle type `λ`.
pub fn z(lambda: &Partition) -> BigInt {
    let mut acc = BigInt::one();
    for (part, mult) in lambda.multiplicities() {
        for j in 1..=mult {
            acc *= part * j;
        }
    }
    acc
}

/// Cycle type of the `k`-th power of a permutation of cycle type `λ`: each
/// part `m` splits into `gcd(m, k)` parts of length `m / gcd(m, k)`.
pub fn power_type(lambda: &Partition, k: usize) -> Partition {
    assert!(k > 0, "power must be positive");
    let mut parts = Vec::with_capacity(lambda.len());
    for &m in &lambda.parts {
        let g = m.gcd(&k);
        parts.extend(std::iter::repeat_n(m / g, g));
    }
    Partition::from_parts(parts)
}

/// True iff every part is a power of two.
pub fn is_binary_partition(lambda: &Partition) -> bool {
    lambda.parts.iter().all(|p| p.is_power_of_two())
}

/// Multiset union of parts, so that `p_λ · p_μ = p_{λ∪μ}`.
pub fn union(lambda: &Partition, mu: &Partition) -> Partition {
    let (a, b) = (&lambda.parts, &mu.parts);
    let mut parts = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] >= b[j] {
            parts.push(a[i]);
            i += 1;
        } else {
            parts.push(b[j]);
            j += 1;
        }
    }
    parts.extend_from_slice(&a[i..]);
    parts.extend_from_slice(&b[j..]);
    Partition { parts }
}
