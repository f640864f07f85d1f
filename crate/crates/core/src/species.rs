//! Cycle indices of binary trees and counts of unlabeled tanglegrams.
//!
//! Rooted binary trees satisfy `R = X + E₂(R)`, so `Z_R = p₁ + h₂[Z_R]`.
//! Unrooted binary trees follow from the dissymmetry relation
//! `U + R² = E₃(R) + XR + R − X`. Tanglegram families are Cartesian products
//! (Kronecker products of cycle indices) and inner plethysms `E_k{·}` of these.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::cycle_index::{h_series, CycleIndexSeries, Rational};
use crate::error::{Error, Result};
use crate::partitions::{is_binary_partition, z, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TanglegramFamily {
    /// Ordered pairs of rooted binary trees on a common leaf set.
    RootedOrdered,
    /// Unordered pairs of rooted binary trees.
    RootedUnordered,
    /// Ordered pairs of unrooted binary trees.
    UnrootedOrdered,
    /// Unordered pairs of unrooted binary trees.
    UnrootedUnordered,
    /// `k`-tuples of rooted binary trees (tangled chains).
    Chain(usize),
    /// Multisets of `k` rooted binary trees.
    ChainUnordered(usize),
}

impl TanglegramFamily {
    pub fn is_unrooted(self) -> bool {
        matches!(self, Self::UnrootedOrdered | Self::UnrootedUnordered)
    }

    /// Smallest number of leaves the family is defined for.
    pub fn min_leaves(self) -> usize {
        if self.is_unrooted() {
            2
        } else {
            1
        }
    }

    /// Number of trees per structure.
    pub fn arity(self) -> usize {
        match self {
            Self::Chain(k) | Self::ChainUnordered(k) => k,
            _ => 2,
        }
    }

    pub fn is_ordered(self) -> bool {
        matches!(self, Self::RootedOrdered | Self::UnrootedOrdered | Self::Chain(_))
    }

    fn validate(self) -> Result<()> {
        if self.arity() == 0 {
            return Err(Error::InvalidArgument(
                "chain length k must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for TanglegramFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::RootedOrdered => f.write_str("rooted-ordered"),
            Self::RootedUnordered => f.write_str("rooted-unordered"),
            Self::UnrootedOrdered => f.write_str("unrooted-ordered"),
            Self::UnrootedUnordered => f.write_str("unrooted-unordered"),
            Self::Chain(k) => write!(f, "chain-{k}"),
            Self::ChainUnordered(k) => write!(f, "chain-unordered-{k}"),
        }
    }
}

/// `Z_R` through degree `max_degree`, by iterated substitution
/// `Z ← p₁ + h₂[Z]` from `Z = 0`.
///
/// The m-th iterate is exact through degree m and the degree-m coefficients of
/// `h₂[Z]` only involve degrees below m, so each iterate is evaluated at
/// truncation m only.
pub fn binary_tree_cycle_index(max_degree: usize) -> CycleIndexSeries {
    let p1 = CycleIndexSeries::power_sum(1);
    let h2 = h_series(2);
    let mut zr = CycleIndexSeries::zero(0);
    for m in 1..=max_degree {
        let current = zr.with_truncation(m);
        let composed = h2
            .plethysm(&current)
            .expect("iterates of Z_R have no constant term");
        zr = p1.add(&composed).with_truncation(m);
    }
    zr
}

/// `Z_U = h₃[Z_R] + p₁Z_R + Z_R − Z_R² − p₁` through degree `max_degree`.
pub fn unrooted_tree_cycle_index(max_degree: usize) -> Result<CycleIndexSeries> {
    unrooted_from_rooted(&binary_tree_cycle_index(max_degree))
}

/// `Z_U` from an already computed `Z_R`.
pub fn unrooted_from_rooted(zr: &CycleIndexSeries) -> Result<CycleIndexSeries> {
    match zr.truncation() {
        Some(n) if n >= 2 => {}
        _ => {
            return Err(Error::InvalidArgument(
                "unrooted trees need truncation degree at least 2".into(),
            ))
        }
    }
    let p1 = CycleIndexSeries::power_sum(1);
    let h3 = h_series(3);
    let zu = h3
        .plethysm(zr)?
        .add(&p1.multiply(zr))
        .add(zr)
        .sub(&zr.multiply(zr))
        .sub(&p1);
    Ok(zu)
}

/// `r_λ = c_λ z_λ`, the number of labeled binary trees fixed by a permutation
/// of cycle type `λ`.
pub fn r_coefficient(lambda: &Partition, zr: &CycleIndexSeries) -> Result<BigInt> {
    if let Some(truncation) = zr.truncation() {
        if lambda.size() > truncation {
            return Err(Error::DegreeOutOfRange {
                n: lambda.size(),
                truncation,
            });
        }
    }
    let value = zr.coefficient(lambda) * Rational::from_integer(z(lambda));
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerCoefficient {
            partition: lambda.clone(),
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// Product formula `r_λ = ∏_{i≥2} (2(λᵢ + ⋯ + λ_l) − 1)` for nonempty binary
/// partitions, zero otherwise. There is no tree on zero leaves, so `r_∅ = 0`.
pub fn r_closed_form(lambda: &Partition) -> BigInt {
    if lambda.is_empty() || !is_binary_partition(lambda) {
        return BigInt::zero();
    }
    let mut tail = 0usize;
    let mut acc = BigInt::one();
    for &part in lambda.parts().iter().skip(1).rev() {
        tail += part;
        acc *= 2 * tail - 1;
    }
    acc
}

/// Wedderburn–Etherington numbers `[w_0, …, w_N]` from
/// `R̃(x) = x + ½(R̃(x)² + R̃(x²))`, independent of any cycle index.
pub fn wedderburn_etherington(max_degree: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); max_degree + 1];
    for n in 1..=max_degree {
        if n == 1 {
            w[1] = BigInt::one();
            continue;
        }
        let mut twice: BigInt = (1..n).map(|i| &w[i] * &w[n - i]).sum();
        if n % 2 == 0 {
            twice += &w[n / 2];
        }
        w[n] = twice / 2;
    }
    w
}

/// `1 · 3 · 5 ⋯ m` for odd `m`, and 1 for `m < 1`.
pub fn odd_double_factorial(m: i64) -> BigInt {
    (1..=m).step_by(2).map(BigInt::from).product()
}

/// Labeled binary trees and labeled tanglegrams on `n` leaves:
/// `((2n−3)!!, ((2n−3)!!)²)`.
pub fn labeled_counts(n: usize) -> (BigInt, BigInt) {
    let trees = odd_double_factorial(2 * n as i64 - 3);
    let tanglegrams = &trees * &trees;
    (trees, tanglegrams)
}

fn rational_to_count(value: Rational, family: TanglegramFamily, n: usize) -> Result<BigInt> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegerCount {
            family: family.to_string(),
            n,
            value: value.to_string(),
        });
    }
    Ok(value.to_integer())
}

/// Holds `Z_R` and `Z_U` for one truncation degree and answers count queries
/// for every tanglegram family up to that degree.
#[derive(Debug, Clone)]
pub struct TanglegramCounter {
    max_degree: usize,
    rooted: CycleIndexSeries,
    unrooted: Option<CycleIndexSeries>,
}

impl TanglegramCounter {
    pub fn new(max_degree: usize) -> Self {
        let rooted = binary_tree_cycle_index(max_degree);
        let unrooted = unrooted_from_rooted(&rooted).ok();
        TanglegramCounter {
            max_degree,
            rooted,
            unrooted,
        }
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn rooted_cycle_index(&self) -> &CycleIndexSeries {
        &self.rooted
    }

    pub fn unrooted_cycle_index(&self) -> Result<&CycleIndexSeries> {
        self.unrooted.as_ref().ok_or_else(|| {
            Error::InvalidArgument("unrooted trees need truncation degree at least 2".into())
        })
    }

    fn check(&self, family: TanglegramFamily, n: usize) -> Result<()> {
        family.validate()?;
        if n > self.max_degree {
            return Err(Error::DegreeOutOfRange {
                n,
                truncation: self.max_degree,
            });
        }
        if n < family.min_leaves() {
            return Err(Error::InvalidArgument(format!(
                "{family} is defined for n >= {}, got n = {n}",
                family.min_leaves()
            )));
        }
        Ok(())
    }

    /// Cycle index of the species counted by `family`, built from the
    /// species operations: Kronecker powers for ordered tuples and inner
    /// plethysm `h_k{·}` for multisets.
    pub fn family_cycle_index(&self, family: TanglegramFamily) -> Result<CycleIndexSeries> {
        family.validate()?;
        let base = if family.is_unrooted() {
            self.unrooted_cycle_index()?
        } else {
            &self.rooted
        };
        let k = family.arity();
        Ok(if family.is_ordered() {
            (1..k).fold(base.clone(), |acc, _| acc.kronecker(base))
        } else {
            base.inner_plethysm_hn(k)
        })
    }

    /// `Σ_{λ⊢n} r_λᵏ / z_λ` over the degree-`n` terms of `Z_R`.
    fn chain_count(&self, k: usize, n: usize) -> Rational {
        self.rooted
            .terms_of_degree(n)
            .map(|(lambda, c)| {
                let zl = Rational::from_integer(z(lambda));
                let r = c * &zl;
                num_traits::pow(r, k) / zl
            })
            .sum()
    }

    /// Number of unlabeled structures of `family` with `n` leaves.
    pub fn count(&self, family: TanglegramFamily, n: usize) -> Result<BigInt> {
        self.check(family, n)?;
        let value = match family {
            TanglegramFamily::RootedOrdered => self.chain_count(2, n),
            TanglegramFamily::Chain(k) => self.chain_count(k, n),
            _ => self.family_cycle_index(family)?.count_at_degree(n)?,
        };
        rational_to_count(value, family, n)
    }

    /// Same count, always through the species-level cycle index (Kronecker
    /// powers for ordered families). Used to cross-check the direct formula.
    pub fn count_via_cycle_index(&self, family: TanglegramFamily, n: usize) -> Result<BigInt> {
        self.check(family, n)?;
        let value = self.family_cycle_index(family)?.count_at_degree(n)?;
        rational_to_count(value, family, n)
    }

    /// `(n, count)` for every `n` from the family's minimum up to the
    /// truncation degree.
    pub fn counts(&self, family: TanglegramFamily) -> Result<Vec<(usize, BigInt)>> {
        family.validate()?;
        let lo = family.min_leaves();
        if self.max_degree < lo {
            return Err(Error::InvalidArgument(format!(
                "{family} needs max n >= {lo}, got {}",
                self.max_degree
            )));
        }
        match family {
            TanglegramFamily::RootedOrdered | TanglegramFamily::Chain(_) => (lo
                ..=self.max_degree)
                .map(|n| Ok((n, self.count(family, n)?)))
                .collect(),
            _ => {
                let series = self.family_cycle_index(family)?;
                (lo..=self.max_degree)
                    .map(|n| {
                        let value = series.count_at_degree(n)?;
                        Ok((n, rational_to_count(value, family, n)?))
                    })
                    .collect()
            }
        }
    }
}

/// One-shot count: builds the cycle indices through `max_degree` and
/// evaluates `family` at `n`.
pub fn count(family: TanglegramFamily, n: usize, max_degree: usize) -> Result<BigInt> {
    if n > max_degree {
        return Err(Error::DegreeOutOfRange {
            n,
            truncation: max_degree,
        });
    }
    TanglegramCounter::new(n).count(family, n)
}
