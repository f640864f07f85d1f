mod common;

use common::{homogeneous, inner_series, series};
use proptest::prelude::*;
use tanglegrams::{h_series, CycleIndexSeries, Rational};

fn half() -> Rational {
    Rational::new(1.into(), 2.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_is_a_commutative_group(f in series(0, 5), g in series(0, 5), h in series(0, 5)) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.add(&g).add(&h), f.add(&g.add(&h)));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(
        f in series(0, 4), g in series(0, 4), h in series(0, 4)
    ) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
        prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
        prop_assert_eq!(f.multiply(&g.add(&h)), f.multiply(&g).add(&f.multiply(&h)));
    }

    #[test]
    fn power_sum_one_is_plethystic_identity(f in series(0, 5), g in inner_series()) {
        let p1 = CycleIndexSeries::power_sum(1);
        prop_assert_eq!(f.plethysm(&p1).unwrap(), f);
        prop_assert_eq!(p1.plethysm(&g).unwrap(), g);
    }

    #[test]
    fn plethysm_is_associative(f in series(0, 3), g in inner_series(), h in inner_series()) {
        let left = f.plethysm(&g.plethysm(&h).unwrap()).unwrap();
        let right = f.plethysm(&g).unwrap().plethysm(&h).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn plethysm_is_a_ring_map_in_the_outer_argument(
        f in series(0, 3), g in series(0, 3), h in inner_series()
    ) {
        let sum = f.add(&g).plethysm(&h).unwrap();
        prop_assert_eq!(sum, f.plethysm(&h).unwrap().add(&g.plethysm(&h).unwrap()));
        let prod = f.multiply(&g).plethysm(&h).unwrap();
        prop_assert_eq!(prod, f.plethysm(&h).unwrap().multiply(&g.plethysm(&h).unwrap()));
    }

    #[test]
    fn kronecker_is_commutative_associative_with_identity(
        f in series(0, 5), g in series(0, 5), h in series(0, 5), a in homogeneous(4)
    ) {
        prop_assert_eq!(f.kronecker(&g), g.kronecker(&f));
        prop_assert_eq!(f.kronecker(&g).kronecker(&h), f.kronecker(&g.kronecker(&h)));
        prop_assert_eq!(h_series(4).kronecker(&a), a);
    }

    #[test]
    fn inner_h2_expansion(g in series(0, 5)) {
        let expected = g.kronecker(&g).add(&g.inner_plethysm_pk(2)).scale(&half());
        prop_assert_eq!(g.inner_plethysm_hn(2), expected);
    }

    #[test]
    fn inner_plethysm_is_homomorphism_to_kronecker_ring(g in series(0, 4)) {
        // h_1 · h_2 = p_1 · h_2, mapped to g * h_2{g}.
        let h1h2 = g.kronecker(&g.inner_plethysm_hn(2));
        let by_pk = g.kronecker(&g).kronecker(&g).add(&g.kronecker(&g.inner_plethysm_pk(2))).scale(&half());
        prop_assert_eq!(h1h2, by_pk);
        // p_a{p_b{g}} = p_ab{g}
        prop_assert_eq!(g.inner_plethysm_pk(2).inner_plethysm_pk(3), g.inner_plethysm_pk(6));
    }

    #[test]
    fn gf_matches_degree_counts(f in series(0, 6)) {
        let gf = f.unlabeled_gf();
        prop_assert_eq!(gf.len(), common::TRUNCATION + 1);
        for (n, c) in gf.iter().enumerate() {
            prop_assert_eq!(c, &f.count_at_degree(n).unwrap());
        }
    }
}
