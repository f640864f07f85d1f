//! Truncated symmetric functions in the power-sum basis.
//!
//! A [`CycleIndexSeries`] is a sparse map `λ ↦ c_λ` standing for
//! `Σ c_λ p_λ`, together with a truncation degree: every coefficient at a
//! partition of size at most the truncation degree is known, everything above
//! it is unknown and never stored. Finite symmetric functions such as `p_k` or
//! `h_n` are *exact*: they have no truncation degree.
//!
//! Binary operations truncate to the smaller of the two truncation degrees.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, power_type, union, z, Partition};

pub type Rational = BigRational;

#[derive(Clone, PartialEq, Eq)]
pub struct CycleIndexSeries {
    terms: BTreeMap<Partition, Rational>,
    /// `None` for exact (finite) symmetric functions.
    truncation: Option<usize>,
}

fn min_truncation(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn within(truncation: Option<usize>, degree: usize) -> bool {
    truncation.is_none_or(|n| degree <= n)
}

impl CycleIndexSeries {
    /// The zero series, known through degree `truncation`.
    pub fn zero(truncation: usize) -> Self {
        CycleIndexSeries {
            terms: BTreeMap::new(),
            truncation: Some(truncation),
        }
    }

    /// The exact zero symmetric function.
    pub fn exact_zero() -> Self {
        CycleIndexSeries {
            terms: BTreeMap::new(),
            truncation: None,
        }
    }

    /// The exact constant `1`, i.e. `p_∅`.
    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    /// The exact power sum `p_k`.
    pub fn power_sum(k: usize) -> Self {
        Self::monomial(Partition::from_parts([k]), Rational::one())
    }

    /// The exact single term `c · p_λ`.
    pub fn monomial(lambda: Partition, coefficient: Rational) -> Self {
        let mut s = Self::exact_zero();
        s.add_term(lambda, coefficient);
        s
    }

    /// Builds a series from `(λ, c_λ)` pairs, summing repeated partitions.
    /// Terms above `truncation` are dropped; `None` builds an exact function.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Partition, Rational)>,
        truncation: Option<usize>,
    ) -> Self {
        let mut s = CycleIndexSeries {
            terms: BTreeMap::new(),
            truncation,
        };
        for (lambda, c) in terms {
            if within(truncation, lambda.size()) {
                s.add_term(lambda, c);
            }
        }
        s
    }

    fn add_term(&mut self, lambda: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn is_exact(&self) -> bool {
        self.truncation.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Reinterprets the series as known through `degree`, dropping stored
    /// terms above it. Raising the degree asserts that the missing
    /// coefficients up to `degree` are zero.
    pub fn with_truncation(mut self, degree: usize) -> Self {
        self.terms.retain(|lambda, _| lambda.size() <= degree);
        self.truncation = Some(degree);
        self
    }

    /// Lowers the truncation degree to at most `degree`.
    pub fn truncated(&self, degree: usize) -> Self {
        let degree = self.truncation.map_or(degree, |n| n.min(degree));
        self.clone().with_truncation(degree)
    }

    /// Coefficient of `p_λ` (zero when absent).
    pub fn coefficient(&self, lambda: &Partition) -> Rational {
        self.terms.get(lambda).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Partition::empty())
    }

    /// Nonzero terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest degree carrying a nonzero term.
    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().next_back().map(Partition::size)
    }

    /// The homogeneous component of degree `n`, as an exact function.
    pub fn degree_component(&self, n: usize) -> Self {
        Self::from_terms(
            self.terms_of_degree(n).map(|(l, c)| (l.clone(), c.clone())),
            None,
        )
    }

    /// Nonzero terms `(λ, c_λ)` with `λ ⊢ n`.
    pub fn terms_of_degree(&self, n: usize) -> impl Iterator<Item = (&Partition, &Rational)> {
        let lo = Partition::from_parts(std::iter::repeat_n(1, n));
        self.terms
            .range(lo..)
            .take_while(move |(l, _)| l.size() == n)
    }

    /// Degrees `0..=d` the series is responsible for: the truncation degree,
    /// or the top nonzero degree for exact functions.
    fn degree_bound(&self) -> usize {
        self.truncation
            .unwrap_or_else(|| self.max_degree().unwrap_or(0))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(l, v)| (l.clone(), v * c)),
            self.truncation,
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let truncation = min_truncation(self.truncation, other.truncation);
        let mut out = Self::from_terms(
            self.terms.iter().map(|(l, c)| (l.clone(), c.clone())),
            truncation,
        );
        for (l, c) in &other.terms {
            if within(truncation, l.size()) {
                out.add_term(l.clone(), c.clone());
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        CycleIndexSeries {
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
            truncation: self.truncation,
        }
    }

    /// Ordinary product, `p_λ · p_μ = p_{λ∪μ}`.
    pub fn multiply(&self, other: &Self) -> Self {
        let truncation = min_truncation(self.truncation, other.truncation);
        let mut out = Self {
            terms: BTreeMap::new(),
            truncation,
        };
        // Terms iterate in increasing degree, so the inner loop can stop at
        // the first partner that overshoots.
        for (l, a) in &self.terms {
            let dl = l.size();
            if !within(truncation, dl) {
                break;
            }
            for (m, b) in &other.terms {
                if !within(truncation, dl + m.size()) {
                    break;
                }
                out.add_term(union(l, m), a * b);
            }
        }
        out
    }

    /// `p_k[g] = g(p_k, p_{2k}, p_{3k}, …)`, keeping only terms whose scaled
    /// degree fits under `truncation`.
    fn power_sum_plethysm(&self, k: usize, truncation: Option<usize>) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .take_while(|(l, _)| within(truncation, l.size() * k))
                .map(|(l, c)| (l.scaled(k), c.clone())),
            truncation,
        )
    }

    /// Plethysm `f[g]`: replace each `p_i` in `f` by `p_i[g]`.
    pub fn plethysm(&self, inner: &Self) -> Result<Self> {
        if !inner.constant_term().is_zero() {
            return Err(Error::NonZeroConstantTerm);
        }
        let truncation = min_truncation(self.truncation, inner.truncation);
        let mut substituted: HashMap<usize, Self> = HashMap::new();
        let mut out = Self {
            terms: BTreeMap::new(),
            truncation,
        };
        for (lambda, c) in &self.terms {
            // Every p_i[g] has minimal degree ≥ i, so f's degree bounds the
            // degree of the image from below.
            if !within(truncation, lambda.size()) {
                break;
            }
            let mut product = Self::one();
            product.truncation = truncation;
            for &part in lambda.parts() {
                let factor = substituted
                    .entry(part)
                    .or_insert_with(|| inner.power_sum_plethysm(part, truncation));
                product = product.multiply(factor);
            }
            for (l, v) in product.terms {
                out.add_term(l, v * c);
            }
        }
        Ok(out)
    }

    /// Kronecker (inner) product: `p_λ * p_μ = δ_{λμ} z_λ p_λ`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let truncation = min_truncation(self.truncation, other.truncation);
        let terms = self.terms.iter().filter_map(|(l, a)| {
            other
                .terms
                .get(l)
                .map(|b| (l.clone(), a * b * Rational::from_integer(z(l))))
        });
        Self::from_terms(terms, truncation)
    }

    /// `p_k{g}`: in each degree, the coefficient `a_λ = c_λ z_λ` is replaced
    /// by `a_{λᵏ}`.
    pub fn inner_plethysm_pk(&self, k: usize) -> Self {
        assert!(k >= 1, "inner plethysm index must be positive");
        let mut out = Self {
            terms: BTreeMap::new(),
            truncation: self.truncation,
        };
        for n in 0..=self.degree_bound() {
            if self.terms_of_degree(n).next().is_none() {
                continue;
            }
            for lambda in partitions_of(n) {
                let mu = power_type(&lambda, k);
                if let Some(c) = self.terms.get(&mu) {
                    let a = c * Rational::from_integer(z(&mu));
                    let zl = Rational::from_integer(z(&lambda));
                    out.add_term(lambda, a / zl);
                }
            }
        }
        out
    }

    /// `h_n{g} = Σ_{μ⊢n} z_μ⁻¹ ∗_{k∈μ} p_k{g}`, the cycle index of multisets of
    /// `n` structures on a common set.
    pub fn inner_plethysm_hn(&self, n: usize) -> Self {
        assert!(n >= 1, "inner plethysm index must be positive");
        let mut powers: HashMap<usize, Self> = HashMap::new();
        let mut out = Self {
            terms: BTreeMap::new(),
            truncation: self.truncation,
        };
        for mu in partitions_of(n) {
            let mut product: Option<Self> = None;
            for &k in mu.parts() {
                let factor = powers
                    .entry(k)
                    .or_insert_with(|| self.inner_plethysm_pk(k));
                product = Some(match product {
                    None => factor.clone(),
                    Some(p) => p.kronecker(factor),
                });
            }
            let weight = Rational::new(BigInt::one(), z(&mu));
            if let Some(p) = product {
                for (l, v) in p.terms {
                    out.add_term(l, v * &weight);
                }
            }
        }
        out
    }

    /// Coefficients of `Z(x, x², x³, …)` for degrees `0..=d`, where `d` is the
    /// truncation degree (or the top degree of an exact function).
    pub fn unlabeled_gf(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.degree_bound() + 1];
        for (l, c) in &self.terms {
            out[l.size()] += c;
        }
        out
    }

    /// Sum of the degree-`n` coefficients: the count of unlabeled structures
    /// of order `n` when the series is a cycle index.
    pub fn count_at_degree(&self, n: usize) -> Result<Rational> {
        if let Some(truncation) = self.truncation {
            if n > truncation {
                return Err(Error::DegreeOutOfRange { n, truncation });
            }
        }
        Ok(self.terms_of_degree(n).map(|(_, c)| c).sum())
    }
}

/// `h_n = Σ_{λ⊢n} p_λ / z_λ`, the cycle index of the species of `n`-sets.
pub fn h_series(n: usize) -> CycleIndexSeries {
    CycleIndexSeries::from_terms(
        partitions_of(n)
            .into_iter()
            .map(|l| {
                let c = Rational::new(BigInt::one(), z(&l));
                (l, c)
            }),
        None,
    )
}

impl fmt::Display for CycleIndexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if lambda.is_empty() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "p{lambda}")?;
            } else {
                write!(f, "{magnitude} p{lambda}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycleIndexSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.truncation {
            Some(n) => write!(f, "{self} + O(deg {})", n + 1),
            None => write!(f, "{self}"),
        }
    }
}

impl Add for &CycleIndexSeries {
    type Output = CycleIndexSeries;
    fn add(self, rhs: Self) -> CycleIndexSeries {
        CycleIndexSeries::add(self, rhs)
    }
}

impl Sub for &CycleIndexSeries {
    type Output = CycleIndexSeries;
    fn sub(self, rhs: Self) -> CycleIndexSeries {
        CycleIndexSeries::sub(self, rhs)
    }
}

impl Mul for &CycleIndexSeries {
    type Output = CycleIndexSeries;
    fn mul(self, rhs: Self) -> CycleIndexSeries {
        self.multiply(rhs)
    }
}

impl Neg for &CycleIndexSeries {
    type Output = CycleIndexSeries;
    fn neg(self) -> CycleIndexSeries {
        CycleIndexSeries::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn series(terms: &[(&[usize], i64, i64)]) -> CycleIndexSeries {
        CycleIndexSeries::from_terms(terms.iter().map(|&(l, n, d)| (p(l), q(n, d))), None)
    }

    fn h2() -> CycleIndexSeries {
        h_series(2)
    }

    #[test]
    fn add_examples() {
        let f = series(&[(&[1], 1, 1), (&[3], 2, 3)]);
        assert_eq!(f.add(&CycleIndexSeries::exact_zero()), f);
        let half_p2 = series(&[(&[2], 1, 2)]);
        assert_eq!(half_p2.add(&half_p2), CycleIndexSeries::power_sum(2));
        assert_eq!(h2().add(&h2()), series(&[(&[1, 1], 1, 1), (&[2], 1, 1)]));
    }

    #[test]
    fn add_takes_min_truncation() {
        let f = series(&[(&[1], 1, 1), (&[3], 1, 1)]).with_truncation(5);
        let g = series(&[(&[2], 1, 1), (&[1, 1, 1, 1], 1, 1)]).with_truncation(3);
        let s = f.add(&g);
        assert_eq!(s.truncation(), Some(3));
        assert_eq!(s, series(&[(&[1], 1, 1), (&[3], 1, 1), (&[2], 1, 1)]).with_truncation(3));
    }

    #[test]
    fn multiply_examples() {
        let p1 = CycleIndexSeries::power_sum(1);
        assert_eq!(p1.multiply(&p1), series(&[(&[1, 1], 1, 1)]));
        assert_eq!(
            h2().multiply(&h2()),
            series(&[(&[1, 1, 1, 1], 1, 4), (&[2, 1, 1], 1, 2), (&[2, 2], 1, 4)])
        );
        let f = series(&[(&[2, 1], 3, 5), (&[1], -1, 1)]);
        assert_eq!(f.multiply(&CycleIndexSeries::one()), f);
    }

    #[test]
    fn multiply_truncates() {
        let f = series(&[(&[1], 1, 1), (&[2], 1, 1)]).with_truncation(3);
        let sq = f.multiply(&f);
        assert_eq!(sq.truncation(), Some(3));
        assert_eq!(sq, series(&[(&[1, 1], 1, 1), (&[2, 1], 2, 1)]).with_truncation(3));
    }

    #[test]
    fn plethysm_examples() {
        let p1 = CycleIndexSeries::power_sum(1);
        assert_eq!(h2().plethysm(&p1).unwrap(), h2());
        assert_eq!(
            CycleIndexSeries::power_sum(2)
                .plethysm(&CycleIndexSeries::power_sum(3))
                .unwrap(),
            CycleIndexSeries::power_sum(6)
        );
        assert_eq!(
            h2().plethysm(&h2()).unwrap(),
            series(&[
                (&[1, 1, 1, 1], 1, 8),
                (&[2, 1, 1], 1, 4),
                (&[2, 2], 3, 8),
                (&[4], 1, 4)
            ])
        );
    }

    #[test]
    fn plethysm_rejects_constant_term() {
        let g = series(&[(&[], 1, 1), (&[1], 1, 1)]);
        assert_eq!(h2().plethysm(&g), Err(Error::NonZeroConstantTerm));
    }

    #[test]
    fn plethysm_truncation_limits_scaled_terms() {
        let g = series(&[(&[1], 1, 1), (&[1, 1], 1, 1)]).with_truncation(4);
        let out = CycleIndexSeries::power_sum(3).plethysm(&g).unwrap();
        assert_eq!(out.truncation(), Some(4));
        assert_eq!(out, series(&[(&[3], 1, 1)]).with_truncation(4));
    }

    /// Evaluates an exact function with `p_k ↦ values(k)`.
    fn evaluate(f: &CycleIndexSeries, values: &dyn Fn(usize) -> Rational) -> Rational {
        f.terms()
            .map(|(l, c)| c * l.parts().iter().map(|&k| values(k)).product::<Rational>())
            .sum()
    }

    #[test]
    fn plethysm_agrees_with_pointwise_evaluation() {
        // f[g] at p_k = P_k equals f evaluated at p_i = g(P_i, P_2i, ...).
        let points: Vec<Box<dyn Fn(usize) -> Rational>> = vec![
            Box::new(|k| q(k as i64 + 1, 3)),
            Box::new(|k| q(2 - (k as i64 % 5), 7)),
        ];
        let f = series(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3), (&[2], -2, 5)]);
        let g = series(&[(&[1], 1, 1), (&[1, 1], 1, 2), (&[2], 3, 2)]);
        let composed = f.plethysm(&g).unwrap();
        for pt in &points {
            let inner = |i: usize| evaluate(&g, &|k| pt(i * k));
            assert_eq!(evaluate(&composed, pt.as_ref()), evaluate(&f, &inner));
        }
    }

    #[test]
    fn kronecker_examples() {
        let p2 = CycleIndexSeries::power_sum(2);
        assert_eq!(p2.kronecker(&p2), series(&[(&[2], 2, 1)]));
        let p11 = series(&[(&[1, 1], 1, 1)]);
        assert!(p11.kronecker(&p2).is_zero());
        assert_eq!(h2().kronecker(&h2()), h2());
    }

    #[test]
    fn inner_plethysm_pk_examples() {
        let g = series(&[(&[1, 1, 1], 3, 7), (&[3], 1, 2), (&[2], 5, 1)]);
        assert_eq!(g.inner_plethysm_pk(1), g);
        assert_eq!(h2().inner_plethysm_pk(2), h2());

        // Degree-3 part of Z_R: a-values 3, 1, 0 at (1³), (2,1), (3).
        let zr3 = series(&[(&[1, 1, 1], 1, 2), (&[2, 1], 1, 2)]);
        // λ² of (1³), (2,1), (3) is (1³), (1³), (3), so a-values become 3, 3, 0.
        assert_eq!(
            zr3.inner_plethysm_pk(2),
            series(&[(&[1, 1, 1], 1, 2), (&[2, 1], 3, 2)])
        );
    }

    #[test]
    fn inner_plethysm_hn_identity_and_expansion() {
        let g = series(&[(&[1], 1, 1), (&[1, 1], 1, 2), (&[2], 1, 2), (&[2, 1], 1, 2)]);
        assert_eq!(g.inner_plethysm_hn(1), g);
        let expected = g
            .kronecker(&g)
            .add(&g.inner_plethysm_pk(2))
            .scale(&q(1, 2));
        assert_eq!(g.inner_plethysm_hn(2), expected);
    }

    #[test]
    fn inner_plethysm_hn_constant_term_counts_multisets() {
        // c constant structures give C(c+n-1, n) multisets of size n.
        let g = series(&[(&[], 4, 1)]);
        assert_eq!(g.inner_plethysm_hn(3).constant_term(), q(20, 1));
    }

    #[test]
    fn h_series_examples() {
        assert_eq!(h_series(0), CycleIndexSeries::one());
        assert_eq!(h_series(2), series(&[(&[1, 1], 1, 2), (&[2], 1, 2)]));
        assert_eq!(
            h_series(3),
            series(&[(&[1, 1, 1], 1, 6), (&[2, 1], 1, 2), (&[3], 1, 3)])
        );
    }

    #[test]
    fn h_series_is_kronecker_identity() {
        for n in 0..=5 {
            let hn = h_series(n);
            let f = CycleIndexSeries::from_terms(
                partitions_of(n)
                    .into_iter()
                    .enumerate()
                    .map(|(i, l)| (l, q(i as i64 * 3 - 2, 5))),
                None,
            );
            assert_eq!(hn.kronecker(&f), f);
        }
    }

    #[test]
    fn unlabeled_gf_and_count() {
        assert_eq!(h2().unlabeled_gf()[2], q(1, 1));
        let zero = CycleIndexSeries::zero(4);
        assert_eq!(zero.unlabeled_gf(), vec![q(0, 1); 5]);
        let f = series(&[(&[], 7, 3), (&[1], 1, 1)]).with_truncation(3);
        assert_eq!(f.count_at_degree(0).unwrap(), q(7, 3));
        assert_eq!(
            f.count_at_degree(4),
            Err(Error::DegreeOutOfRange { n: 4, truncation: 3 })
        );
    }

    #[test]
    fn display_rendering() {
        let f = series(&[(&[1], 1, 1), (&[1, 1], 1, 2), (&[2], 1, 2)]);
        assert_eq!(f.to_string(), "p[1] + 1/2 p[1,1] + 1/2 p[2]");
        let g = series(&[(&[], -1, 1), (&[2], -3, 4), (&[1, 1], 5, 8)]);
        assert_eq!(g.to_string(), "-1 + 5/8 p[1,1] - 3/4 p[2]");
        assert_eq!(CycleIndexSeries::zero(3).to_string(), "0");
    }

    #[test]
    fn degree_component_extracts_homogeneous_piece() {
        let f = series(&[(&[1], 1, 1), (&[1, 1], 1, 2), (&[2], 1, 2), (&[3], 1, 3)]);
        assert_eq!(f.degree_component(2), h2());
        assert!(f.degree_component(4).is_zero());
    }
}
