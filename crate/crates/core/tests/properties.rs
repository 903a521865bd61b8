use std::sync::Arc;

use birational_rowmotion::algebra::{random_labeling, Labeling, Rational, Semifield, Tropical};
use birational_rowmotion::counting::{
    enumerate_plane_partitions, enumerate_plane_partitions_bounded, macmahon, pp_bijection, BijectionDirection,
    EnumerationBounds,
};
use birational_rowmotion::poset::GridPoset;
use birational_rowmotion::rowmotion::{polygonal_rowmotion, rowmotion};
use birational_rowmotion::zeta::{
    intermediate_poset, verify_equivariance, zeta, zeta_k, zeta_k_inverse, zeta_k_with_anchor, ZetaDirection,
};
use birational_rowmotion::Error;
use proptest::prelude::*;

/// `(r, s, k)` with `r ≥ s ≥ 2` and `1 ≤ k < s`.
fn dims() -> impl Strategy<Value = (u32, u32, u32)> {
    (2u32..=4)
        .prop_flat_map(|s| (s..=4, Just(s)))
        .prop_flat_map(|(r, s)| (Just(r), Just(s), 1..s))
}

fn source<A: Semifield>(r: u32, s: u32, k: u32, seed: u64) -> Labeling<A> {
    random_labeling(&Arc::new(intermediate_poset(r, s, k + 1).unwrap()), seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn zeta_step_round_trips_rationally((r, s, k) in dims(), seed in any::<u64>()) {
        let x = source::<Rational>(r, s, k, seed);
        let z = zeta_k(&x, k).unwrap();
        prop_assert_eq!(zeta_k_inverse(&z, k).unwrap(), x);
    }

    #[test]
    fn zeta_step_round_trips_tropically((r, s, k) in dims(), seed in any::<u64>()) {
        let x = source::<Tropical>(r, s, k, seed);
        let z = zeta_k(&x, k).unwrap();
        prop_assert_eq!(zeta_k_inverse(&z, k).unwrap(), x);
    }

    #[test]
    fn anchor_does_not_matter((r, s, k) in dims(), seed in any::<u64>(), p in 1i64..9, q in 1i64..9) {
        let x = source::<Rational>(r, s, k, seed);
        let a = zeta_k_with_anchor(&x, k, Rational::new(p, q)).unwrap();
        prop_assert_eq!(a, zeta_k(&x, k).unwrap());
    }

    #[test]
    fn zeta_commutes_with_polygonal_rowmotion((r, s, k) in dims(), seed in any::<u64>()) {
        let x = source::<Rational>(r, s, k, seed);
        prop_assert!(verify_equivariance(&x, k).unwrap());
    }

    #[test]
    fn tropical_zeta_keeps_integers((r, s, _k) in dims(), seed in any::<u64>()) {
        let x: Labeling<Tropical> = random_labeling(&Arc::new(intermediate_poset(r, s, s).unwrap()), seed);
        let y = zeta(&x, ZetaDirection::Forward).unwrap();
        prop_assert!(y.values().iter().all(|v| v.to_integer().is_some()));
        prop_assert_eq!(zeta(&y, ZetaDirection::Inverse).unwrap(), x);
    }

    #[test]
    fn rectangle_rowmotion_has_period_r_plus_s(r in 1u32..=4, s in 1u32..=4, seed in any::<u64>()) {
        let x: Labeling<Rational> = random_labeling(&Arc::new(GridPoset::rectangle(r, s).unwrap()), seed);
        let n = (r + s) as i64;
        prop_assert_eq!(rowmotion(&x, n), x.clone());
        prop_assert_eq!(rowmotion(&rowmotion(&x, 2), -2), x);
    }

    #[test]
    fn polygonal_rowmotion_has_period_r_plus_s((r, s, k) in dims(), seed in any::<u64>()) {
        let x = source::<Rational>(r, s, k, seed);
        prop_assert_eq!(polygonal_rowmotion(&x, (r + s) as i64).unwrap(), x);
    }

    #[test]
    fn bijection_preserves_height_and_nonnegativity(s in 1u32..=3, extra in 0u32..=1, l in 0u32..=2, pick in any::<prop::sample::Index>()) {
        let r = s + extra;
        let t = Arc::new(GridPoset::trapezoid(r, s).unwrap());
        let all = enumerate_plane_partitions(&t, l).unwrap();
        let pp = &all[pick.index(all.len())];
        let image = pp_bijection(pp, BijectionDirection::T2R).unwrap();
        prop_assert!(image.height() <= l);
        prop_assert_eq!(image.height(), pp.height());
        prop_assert_eq!(&pp_bijection(&image, BijectionDirection::R2T).unwrap(), pp);
    }
}

#[test]
fn enumeration_is_ordered_and_complete() {
    let rect = Arc::new(GridPoset::rectangle(2, 3).unwrap());
    let all = enumerate_plane_partitions(&rect, 2).unwrap();
    assert_eq!(all.len() as u64, u64::try_from(macmahon(2, 3, 2)).unwrap());
    let keys: Vec<&[u32]> = all.iter().map(|p| p.values()).collect();
    assert!(keys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn oversized_enumeration_is_refused() {
    let big = Arc::new(GridPoset::rectangle(5, 5).unwrap());
    let bounds = EnumerationBounds::default();
    assert!(matches!(enumerate_plane_partitions(&big, 1), Err(Error::TooLarge(_))));
    let small = Arc::new(GridPoset::rectangle(2, 2).unwrap());
    assert!(matches!(
        enumerate_plane_partitions_bounded(&small, bounds.max_height + 1, bounds),
        Err(Error::TooLarge(_))
    ));
}

proptest! {
    #[test]
    fn skew_shapes_survive_the_text_format(seed in any::<u64>(), cells in 1usize..=14) {
        let shape = birational_rowmotion::verify::random_skew_shape(seed, cells).unwrap();
        let poset = shape.poset();
        prop_assert!(poset.len() <= cells);
        let back = GridPoset::parse(&poset.to_text()).unwrap();
        prop_assert_eq!(back.to_text(), poset.to_text());
    }
}
