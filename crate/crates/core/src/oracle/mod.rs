//! Brute-force cross-checks.
//!
//! Labeled rooted and unrooted binary trees are listed explicitly, the
//! symmetric group acts on them by relabeling leaves, and orbit counts come
//! from Burnside's lemma summed over every group element. Nothing here reads
//! a cycle index.

mod permutation;
mod rooted;
mod unrooted;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub use permutation::Permutation;
pub use rooted::RootedTree;
pub use unrooted::{UnrootedTree, Vertex};

use crate::error::{Error, Result};
use crate::species::TanglegramFamily;

/// Structures whose leaves can be relabeled by a permutation.
pub trait LeafLabeled: Eq + Sync {
    fn relabel(&self, sigma: &Permutation) -> Self;
}

impl LeafLabeled for RootedTree {
    fn relabel(&self, sigma: &Permutation) -> Self {
        RootedTree::relabel(self, sigma)
    }
}

impl LeafLabeled for UnrootedTree {
    fn relabel(&self, sigma: &Permutation) -> Self {
        UnrootedTree::relabel(self, sigma)
    }
}

/// Size guards for the brute-force paths. Exceeding one is an error.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_rooted_leaves: usize,
    pub max_unrooted_leaves: usize,
    pub max_burnside_leaves: usize,
    pub max_chain_length: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            max_rooted_leaves: 8,
            max_unrooted_leaves: 8,
            max_burnside_leaves: 7,
            max_chain_length: 6,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Oracle {
    pub limits: OracleLimits,
}

fn guard(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::SizeLimitExceeded { what, n, limit })
    } else {
        Ok(())
    }
}

impl Oracle {
    pub fn new(limits: OracleLimits) -> Self {
        Oracle { limits }
    }

    /// Every rooted binary tree on leaves `{1, …, n}`, once each.
    pub fn enumerate_rooted(&self, n: usize) -> Result<Vec<RootedTree>> {
        guard("rooted tree enumeration", n, self.limits.max_rooted_leaves)?;
        if n == 0 {
            return Err(Error::InvalidArgument("rooted trees need n >= 1".into()));
        }
        Ok(rooted::enumerate(n))
    }

    /// Every unrooted binary tree on leaves `{1, …, n}`, once each.
    pub fn enumerate_unrooted(&self, n: usize) -> Result<Vec<UnrootedTree>> {
        guard("unrooted tree enumeration", n, self.limits.max_unrooted_leaves)?;
        if n < 2 {
            return Err(Error::InvalidArgument("unrooted trees need n >= 2".into()));
        }
        Ok(unrooted::enumerate(n))
    }

    /// `f(σ)`, the number of fixed trees, for every `σ ∈ S_n`.
    pub fn fixed_points(&self, shape: TreeShape, n: usize) -> Result<FixedPointTable> {
        guard("Burnside orbit count", n, self.limits.max_burnside_leaves)?;
        let fixed = match shape {
            TreeShape::Rooted => fixed_points_by_element(&self.enumerate_rooted(n)?, n),
            TreeShape::Unrooted => fixed_points_by_element(&self.enumerate_unrooted(n)?, n),
        };
        Ok(FixedPointTable {
            shape,
            n,
            fixed,
            max_chain_length: self.limits.max_chain_length,
        })
    }

    /// Orbits of labeled structures of `family` on `n` leaves under
    /// relabeling, by Burnside's lemma. See [`FixedPointTable::orbit_count`].
    pub fn burnside_count(&self, family: TanglegramFamily, n: usize) -> Result<BigInt> {
        guard("Burnside orbit count", n, self.limits.max_burnside_leaves)?;
        check_family(family, n, self.limits.max_chain_length)?;
        self.fixed_points(TreeShape::of(family), n)?
            .orbit_count(family)
    }
}

fn check_family(family: TanglegramFamily, n: usize, max_chain_length: usize) -> Result<()> {
    let k = family.arity();
    if k == 0 {
        return Err(Error::InvalidArgument("chain length k must be at least 1".into()));
    }
    guard("Burnside chain length", k, max_chain_length)?;
    if n < family.min_leaves() {
        return Err(Error::InvalidArgument(format!(
            "{family} is defined for n >= {}, got n = {n}",
            family.min_leaves()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeShape {
    Rooted,
    Unrooted,
}

impl TreeShape {
    pub fn of(family: TanglegramFamily) -> Self {
        if family.is_unrooted() {
            TreeShape::Unrooted
        } else {
            TreeShape::Rooted
        }
    }
}

/// Fixed-tree counts for every element of `S_n` acting on one kind of tree.
#[derive(Debug, Clone)]
pub struct FixedPointTable {
    shape: TreeShape,
    n: usize,
    fixed: HashMap<Permutation, u64>,
    max_chain_length: usize,
}

impl FixedPointTable {
    pub fn shape(&self) -> TreeShape {
        self.shape
    }

    pub fn leaves(&self) -> usize {
        self.n
    }

    /// Number of trees fixed by `sigma`.
    pub fn get(&self, sigma: &Permutation) -> Option<u64> {
        self.fixed.get(sigma).copied()
    }

    /// Burnside orbit count for `family`, whose trees must have this table's
    /// shape.
    ///
    /// Ordered `k`-tuples are acted on by `S_n`; a tuple is fixed exactly when
    /// every entry is, so `fix(σ) = f(σ)ᵏ` with `f(σ)` the fixed trees.
    /// Multisets use `S_n × S_k`, where `(σ, τ)` fixes `∏_{c} f(σᶜ)` tuples,
    /// the product running over the cycle lengths `c` of `τ`.
    pub fn orbit_count(&self, family: TanglegramFamily) -> Result<BigInt> {
        check_family(family, self.n, self.max_chain_length)?;
        if TreeShape::of(family) != self.shape {
            return Err(Error::InvalidArgument(format!(
                "{family} needs {:?} trees, table holds {:?} trees",
                TreeShape::of(family),
                self.shape
            )));
        }
        let k = family.arity();
        let mut total = BigInt::zero();
        let mut order: BigInt = (1..=self.n).map(BigInt::from).product();
        if family.is_ordered() {
            for f in self.fixed.values() {
                total += num_traits::pow(BigInt::from(*f), k);
            }
        } else {
            let taus: Vec<_> = Permutation::all(k).map(|t| t.cycle_type()).collect();
            order *= taus.len();
            for sigma in self.fixed.keys() {
                for tau_type in &taus {
                    let mut term = BigInt::one();
                    for &c in tau_type.parts() {
                        term *= self.fixed[&sigma.pow(c)];
                    }
                    total += term;
                }
            }
        }
        let (orbits, rem) = total.div_rem(&order);
        if !rem.is_zero() {
            return Err(Error::NonIntegerCount {
                family: family.to_string(),
                n: self.n,
                value: format!("{total}/{order}"),
            });
        }
        Ok(orbits)
    }
}

/// Number of structures in `trees` left unchanged by relabeling with `sigma`.
pub fn fix_count<T: LeafLabeled>(trees: &[T], sigma: &Permutation) -> BigInt {
    BigInt::from(fix_count_small(trees, sigma))
}

fn fix_count_small<T: LeafLabeled>(trees: &[T], sigma: &Permutation) -> u64 {
    trees.iter().filter(|t| t.relabel(sigma) == **t).count() as u64
}

/// `f(σ)` for every `σ ∈ S_n`.
fn fixed_points_by_element<T: LeafLabeled>(trees: &[T], n: usize) -> HashMap<Permutation, u64> {
    let group: Vec<Permutation> = Permutation::all(n).collect();
    group
        .into_par_iter()
        .map(|sigma| {
            let f = fix_count_small(trees, &sigma);
            (sigma, f)
        })
        .collect()
}

pub fn enumerate_rooted(n: usize) -> Result<Vec<RootedTree>> {
    Oracle::default().enumerate_rooted(n)
}

pub fn enumerate_unrooted(n: usize) -> Result<Vec<UnrootedTree>> {
    Oracle::default().enumerate_unrooted(n)
}

pub fn burnside_count(family: TanglegramFamily, n: usize) -> Result<BigInt> {
    Oracle::default().burnside_count(family, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{partitions_of, Partition};

    #[test]
    fn rooted_counts() {
        assert_eq!(enumerate_rooted(1).unwrap().len(), 1);
        assert_eq!(enumerate_rooted(3).unwrap().len(), 3);
        assert_eq!(enumerate_rooted(5).unwrap().len(), 105);
        assert!(matches!(
            enumerate_rooted(9),
            Err(Error::SizeLimitExceeded { n: 9, limit: 8, .. })
        ));
    }

    #[test]
    fn unrooted_counts() {
        assert_eq!(enumerate_unrooted(2).unwrap().len(), 1);
        assert_eq!(enumerate_unrooted(4).unwrap().len(), 3);
        assert_eq!(enumerate_unrooted(5).unwrap().len(), 15);
        assert!(enumerate_unrooted(1).is_err());
        assert!(enumerate_unrooted(9).is_err());
    }

    #[test]
    fn fix_count_examples() {
        let trees4 = enumerate_rooted(4).unwrap();
        assert_eq!(fix_count(&trees4, &Permutation::identity(4)), 15.into());
        let double_swap = Permutation::with_cycle_type(&Partition::from_parts([2, 2]));
        assert_eq!(fix_count(&trees4, &double_swap), 3.into());
        let trees3 = enumerate_rooted(3).unwrap();
        let rotation = Permutation::with_cycle_type(&Partition::from_parts([3]));
        assert_eq!(fix_count(&trees3, &rotation), 0.into());
    }

    #[test]
    fn fix_count_is_a_class_function() {
        for n in 1..=6 {
            let trees = enumerate_rooted(n).unwrap();
            let mut by_type: HashMap<Partition, BigInt> = HashMap::new();
            for sigma in Permutation::all(n) {
                let f = fix_count(&trees, &sigma);
                let prev = by_type.entry(sigma.cycle_type()).or_insert_with(|| f.clone());
                assert_eq!(*prev, f, "n = {n}, σ = {sigma:?}");
            }
            assert_eq!(by_type.len(), partitions_of(n).len());
        }
    }

    #[test]
    fn burnside_examples() {
        assert_eq!(burnside_count(TanglegramFamily::RootedOrdered, 4).unwrap(), 13.into());
        assert_eq!(burnside_count(TanglegramFamily::RootedUnordered, 4).unwrap(), 10.into());
        assert_eq!(burnside_count(TanglegramFamily::UnrootedOrdered, 5).unwrap(), 4.into());
        assert_eq!(burnside_count(TanglegramFamily::Chain(1), 5).unwrap(), 3.into());
    }

    #[test]
    fn fixed_point_table_serves_every_family_of_its_shape() {
        let oracle = Oracle::default();
        let table = oracle.fixed_points(TreeShape::Rooted, 4).unwrap();
        assert_eq!(table.leaves(), 4);
        assert_eq!(table.get(&Permutation::identity(4)), Some(15));
        assert_eq!(table.orbit_count(TanglegramFamily::RootedOrdered).unwrap(), 13.into());
        assert_eq!(table.orbit_count(TanglegramFamily::RootedUnordered).unwrap(), 10.into());
        assert!(table.orbit_count(TanglegramFamily::UnrootedOrdered).is_err());
        let unrooted = oracle.fixed_points(TreeShape::Unrooted, 5).unwrap();
        assert_eq!(unrooted.orbit_count(TanglegramFamily::UnrootedOrdered).unwrap(), 4.into());
        assert!(unrooted.orbit_count(TanglegramFamily::Chain(1)).is_err());
    }

    #[test]
    fn burnside_guards() {
        assert!(matches!(
            burnside_count(TanglegramFamily::RootedOrdered, 8),
            Err(Error::SizeLimitExceeded { .. })
        ));
        assert!(burnside_count(TanglegramFamily::UnrootedOrdered, 1).is_err());
        assert!(burnside_count(TanglegramFamily::Chain(7), 3).is_err());
        assert!(burnside_count(TanglegramFamily::Chain(0), 3).is_err());
    }
}
