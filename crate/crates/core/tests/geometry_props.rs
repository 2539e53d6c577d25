mod common;

use helly_core::geometry::{
    bodies_intersect, dual_halfspaces, in_hull, nerve, ColoredFamily, ConvexBody, Point,
};
use helly_core::oracle::{hulls_meet_low_dim, in_hull_low_dim};
use proptest::prelude::*;

fn hull_family(dim: usize) -> impl Strategy<Value = Vec<Vec<Point>>> {
    prop::collection::vec(common::points(dim, 1..=5, 4), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn hull_intersection_matches_planar_oracle(hulls in (1usize..=2).prop_flat_map(hull_family)) {
        let dim = hulls[0][0].len();
        let bodies: Vec<ConvexBody> = hulls.iter().cloned().map(ConvexBody::Hull).collect();
        let refs: Vec<&ConvexBody> = bodies.iter().collect();
        let found = bodies_intersect(dim, &refs).unwrap();
        prop_assert_eq!(found.is_some(), hulls_meet_low_dim(&hulls).unwrap());
        if let Some(p) = found {
            prop_assert!(bodies.iter().all(|b| b.contains(&p)));
        }
    }

    #[test]
    fn hull_membership_matches_planar_oracle(pts in common::points(2, 1..=5, 4), q in common::points(2, 1..=1, 4)) {
        prop_assert_eq!(in_hull(&q[0], &pts).unwrap(), in_hull_low_dim(&q[0], &pts).unwrap());
    }

    #[test]
    fn origin_in_hull_iff_dual_halfspaces_miss(pts in (1usize..=3).prop_flat_map(|d| common::points(d, 1..=6, 3))) {
        let dim = pts[0].len();
        let count = pts.len();
        let origin = vec![helly_core::rational::zero(); dim];
        for mask in 1u64..(1 << count) {
            let sub: Vec<Point> = (0..count).filter(|i| mask >> i & 1 == 1).map(|i| pts[i].clone()).collect();
            let duals = dual_halfspaces(&sub);
            let refs: Vec<&ConvexBody> = duals.iter().collect();
            let meet = bodies_intersect(dim, &refs).unwrap().is_some();
            prop_assert_eq!(in_hull(&origin, &sub).unwrap(), !meet);
        }
    }

    #[test]
    fn shrinking_bodies_never_adds_nerve_faces(hulls in prop::collection::vec(common::points(2, 1..=4, 4), 1..=6), keep in any::<u64>()) {
        let shrunk: Vec<Vec<Point>> = hulls
            .iter()
            .enumerate()
            .map(|(i, h)| {
                let kept: Vec<Point> = h.iter().enumerate().filter(|(j, _)| keep >> ((i * 4 + j) % 64) & 1 == 1).map(|(_, p)| p.clone()).collect();
                if kept.is_empty() { vec![h[0].clone()] } else { kept }
            })
            .collect();
        let build = |hs: &[Vec<Point>]| {
            let fam = ColoredFamily::uncolored(2, hs.iter().cloned().map(ConvexBody::Hull).collect()).unwrap();
            nerve(&fam, 12).unwrap().complex
        };
        let big = build(&hulls);
        let small = build(&shrunk);
        for f in small.faces(None) {
            prop_assert!(big.contains(f));
        }
    }
}
