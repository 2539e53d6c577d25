#![allow(dead_code)]

use helly_core::generate::{random_matroid, rng_from_seed, MatroidKindName};
use helly_core::geometry::Point;
use helly_core::matroid::Matroid;
use helly_core::rational::int;
use helly_core::{Simplex, SimplicialComplex};
use proptest::prelude::*;

/// A complex on `0..n` from random generator masks.
pub fn complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(0u64..(1u64 << n), 0..=max_facets).prop_map(move |masks| {
            SimplicialComplex::new(Simplex::range(n), masks.into_iter().map(Simplex::from_bits))
                .unwrap()
        })
    })
}

pub fn matroid(max_n: usize) -> impl Strategy<Value = Matroid> {
    (1..=max_n, 0..4usize, any::<u64>()).prop_map(|(n, kind, seed)| {
        random_matroid(&mut rng_from_seed(seed), n, MatroidKindName::ALL[kind]).unwrap()
    })
}

pub fn points(
    dim: usize,
    count: std::ops::RangeInclusive<usize>,
    span: i64,
) -> impl Strategy<Value = Vec<Point>> {
    prop::collection::vec(prop::collection::vec(-span..=span, dim), count).prop_map(|pts| {
        pts.into_iter()
            .map(|p| p.into_iter().map(int).collect())
            .collect()
    })
}
