#![allow(dead_code)]

use proptest::prelude::*;
use proptest::sample::Index;
use tanglegrams::{partitions_of, CycleIndexSeries, Partition, Rational};

pub const TRUNCATION: usize = 6;

pub fn partition(min_size: usize, max_size: usize) -> impl Strategy<Value = Partition> {
    (min_size..=max_size, any::<Index>()).prop_map(|(n, idx)| idx.get(&partitions_of(n)).clone())
}

pub fn coefficient() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

/// Sparse series with terms of degree `min_size..=max_size`, truncated at
/// [`TRUNCATION`].
pub fn series(min_size: usize, max_size: usize) -> impl Strategy<Value = CycleIndexSeries> {
    proptest::collection::vec((partition(min_size, max_size), coefficient()), 0..5)
        .prop_map(|terms| CycleIndexSeries::from_terms(terms, Some(TRUNCATION)))
}

/// Series that may be composed on the inside of a plethysm.
pub fn inner_series() -> impl Strategy<Value = CycleIndexSeries> {
    series(1, 3)
}

/// A single homogeneous component of degree `n`, exact.
pub fn homogeneous(n: usize) -> impl Strategy<Value = CycleIndexSeries> {
    let count = partitions_of(n).len();
    proptest::collection::vec(coefficient(), count).prop_map(move |coeffs| {
        CycleIndexSeries::from_terms(partitions_of(n).into_iter().zip(coeffs), None)
    })
}
