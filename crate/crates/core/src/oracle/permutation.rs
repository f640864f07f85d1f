use std::fmt;

use itertools::Itertools;

use crate::partitions::Partition;

/// A permutation of `{1, …, n}`, stored 0-based: `images[i]` is the image
/// of `i + 1`, minus one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based images; `None` unless it is a
    /// bijection of `0..n`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation { images })
    }

    /// Some permutation whose cycle type is `lambda`, with cycles on
    /// consecutive points.
    pub fn with_cycle_type(lambda: &Partition) -> Self {
        let mut images = Vec::with_capacity(lambda.size());
        let mut start = 0;
        for &len in lambda.parts() {
            for j in 0..len {
                images.push(start + (j + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    /// All `n!` permutations of `{1, …, n}`.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based label `label`.
    pub fn apply(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.degree()), |acc, _| self.compose(&acc))
    }

    /// Lengths of the cycles.
    pub fn cycle_type(&self) -> Partition {
        let mut seen = vec![false; self.images.len()];
        let mut lengths = Vec::new();
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                lengths.push(len);
            }
        }
        Partition::from_parts(lengths)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<usize> = self.images.iter().map(|i| i + 1).collect();
        write!(f, "Permutation{one_based:?}")
    }
}
