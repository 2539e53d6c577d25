mod common;

use helly_core::matroid::{check_matroid_axioms, matroid_union_rank, Matroid, MatroidKind};
use helly_core::oracle::{rank_from_family, tolerance_rank_by_search};
use helly_core::Simplex;
use proptest::prelude::*;

proptest! {
    #[test]
    fn rank_axioms(m in common::matroid(7)) {
        let g = m.ground();
        prop_assert_eq!(m.rank(Simplex::EMPTY).unwrap(), 0);
        for a in g.subsets() {
            let ra = m.rank(a).unwrap();
            prop_assert!(ra <= a.len());
            for b in g.subsets() {
                let rb = m.rank(b).unwrap();
                if a.is_subset(b) {
                    prop_assert!(ra <= rb);
                }
                let lhs = m.rank(a.union(b)).unwrap() + m.rank(a.intersection(b)).unwrap();
                prop_assert!(lhs <= ra + rb);
            }
        }
    }

    #[test]
    fn rank_matches_independent_family(m in common::matroid(7)) {
        let family = m.independent_sets();
        prop_assert!(check_matroid_axioms(m.ground(), &family).unwrap().is_ok());
        for a in m.ground().subsets() {
            prop_assert_eq!(m.rank(a).unwrap(), rank_from_family(&family, a));
        }
    }

    #[test]
    fn tolerance_rank_closed_form(m in common::matroid(8), t in 0usize..=8) {
        prop_assume!(t <= m.full_rank());
        let mt = m.tolerance(t).unwrap();
        let u = Matroid::uniform(m.ground_size(), t).unwrap();
        for a in m.ground().subsets() {
            let r = mt.rank(a).unwrap();
            prop_assert_eq!(r, a.len().min(m.rank(a).unwrap() + t));
            prop_assert_eq!(r, tolerance_rank_by_search(&m, t, a).unwrap());
            prop_assert_eq!(r, matroid_union_rank(&m, &u, a).unwrap());
        }
    }

    #[test]
    fn tolerance_family_is_a_matroid(m in common::matroid(8), t in 0usize..=8) {
        prop_assume!(t <= m.full_rank());
        let mt = m.tolerance(t).unwrap();
        let family: Vec<Simplex> = m
            .ground()
            .subsets()
            .filter(|s| m.rank(*s).unwrap() + t >= s.len())
            .collect();
        prop_assert!(check_matroid_axioms(m.ground(), &family).unwrap().is_ok());
        let mut from_rank = mt.independent_sets();
        let mut direct = family;
        from_rank.sort();
        direct.sort();
        prop_assert_eq!(from_rank, direct);
    }

    #[test]
    fn greedy_spanning_sets(m in common::matroid(8)) {
        let r = m.full_rank();
        for t in 0..=m.ground_size() {
            let u = m.spanning_set_of_size(t).unwrap();
            prop_assert_eq!(u.len(), t);
            prop_assert!(m.rank(u).unwrap() >= t.min(r));
        }
    }

    #[test]
    fn rank_loss_is_bounded_by_removed_elements(m in common::matroid(7)) {
        for w in m.ground().subsets() {
            let rw = m.rank(w).unwrap();
            for u in w.subsets() {
                prop_assert!(m.rank(u).unwrap() + w.difference(u).len() >= rw);
            }
        }
    }

    #[test]
    fn partition_rank_counts_blocks_met(m in common::matroid(8)) {
        if let MatroidKind::Partition { blocks } = m.kind() {
            for a in m.ground().subsets() {
                let met = blocks.iter().filter(|b| !b.is_disjoint(a)).count();
                prop_assert_eq!(m.rank(a).unwrap(), met);
            }
        }
    }
}
