mod common;

use helly_core::geometry::{in_hull, Point};
use helly_core::oracle::hulls_meet_low_dim;
use helly_core::rational::{int, zero, Rational};
use helly_core::tverberg::{
    find_tverberg_partition, hulls_intersect, lift_parts, tolerant_tverberg, tverberg_with_center,
    verify_center, verify_tolerance, weights_cancel, TverbergBudget,
};
use proptest::prelude::*;

fn parts(r: usize, dim: usize) -> impl Strategy<Value = Vec<Vec<Point>>> {
    prop::collection::vec(common::points(dim, 1..=3, 3), r)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn lift_detects_meeting_hulls(ps in (2usize..=3, 1usize..=2).prop_flat_map(|(r, d)| parts(r, d))) {
        let r = ps.len();
        let direct = hulls_intersect(&ps).unwrap().is_some();
        let lifted: Vec<Point> = lift_parts(&ps, r).unwrap().into_iter().map(|l| l.coords).collect();
        let origin = vec![zero(); lifted[0].len()];
        prop_assert_eq!(direct, in_hull(&origin, &lifted).unwrap());
        prop_assert_eq!(direct, hulls_meet_low_dim(&ps).unwrap());
    }

    #[test]
    fn lift_weights_cancel_only_when_equal(r in 2usize..=5, w in prop::collection::vec(0i64..=4, 5)) {
        let lambda: Vec<Rational> = w[..r].iter().map(|&x| int(x)).collect();
        let equal = lambda.iter().all(|x| *x == lambda[0]);
        prop_assert_eq!(weights_cancel(r, &lambda), equal);
    }

    #[test]
    fn centers_verify(
        (d, r, extra) in prop_oneof![Just((1usize, 2usize)), Just((2, 2)), Just((1, 3))]
            .prop_flat_map(|(d, r)| (Just(d), Just(r), 1usize..=2)),
        seed in any::<u64>(),
    ) {
        let n = (r - 1) * (d + 1);
        let pts = helly_core::generate::random_points(&mut helly_core::generate::rng_from_seed(seed), d, n + extra);
        let cert = tverberg_with_center(&pts, r, TverbergBudget::default()).unwrap();
        prop_assert_eq!(cert.center.len(), n);
        prop_assert!(verify_center(&pts, &cert.labels, r, cert.center).unwrap().valid);
        prop_assert!(find_tverberg_partition(&pts, r).unwrap().is_some());
    }

    #[test]
    fn tolerant_partitions_survive_removals(d in 1usize..=2, seed in any::<u64>()) {
        let (r, t) = (2, 1);
        let size = (t + 1) * (r - 1) * (d + 1) + 1;
        let pts = helly_core::generate::random_points(&mut helly_core::generate::rng_from_seed(seed), d, size);
        let cert = tolerant_tverberg(&pts, r, t, TverbergBudget::default()).unwrap();
        prop_assert!(verify_tolerance(&pts, &cert.labels, r, t, 100_000).unwrap().valid);
        for level in &cert.levels {
            prop_assert!(level.remainder <= level.t * r || level.overlap > level.t);
        }
    }
}
