mod common;

use helly_core::generate::rng_from_seed;
use helly_core::homology::{is_d_leray_induced, Field};
use helly_core::oracle::witness_by_subsets;
use helly_core::suite::{collapsible_instance, leray_instance, TheoremInstance};
use helly_core::theorems::{
    cofacial_extension_holds, find_witness, hypothesis_collapsible, hypothesis_leray,
    hypothesis_strong, verify_witness, Conclusion,
};
use helly_core::Simplex;
use proptest::prelude::*;

fn instance(seed: u64, leray: bool) -> Option<TheoremInstance> {
    let mut rng = rng_from_seed(seed);
    if leray {
        leray_instance(&mut rng)
    } else {
        collapsible_instance(&mut rng)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counterexamples_accompany_failures(seed in any::<u64>(), leray in any::<bool>()) {
        let Some(TheoremInstance { complex: x, matroid: mat, d, m, k }) = instance(seed, leray) else {
            return Ok(());
        };
        for rep in [
            hypothesis_collapsible(&x, &mat, d, m, k).unwrap(),
            hypothesis_leray(&x, &mat, d, m, k).unwrap(),
            hypothesis_strong(&x, &mat, d, m, k).unwrap(),
        ] {
            prop_assert_eq!(rep.holds, rep.counterexample.is_none());
        }
        if let Some(c) = hypothesis_collapsible(&x, &mat, d, m, k).unwrap().counterexample {
            prop_assert!(!x.contains(c.u));
            prop_assert!(c.s.is_subset(c.u) && c.s.len() == d);
            prop_assert_eq!(c.u.len(), d + m);
            prop_assert!(mat.rank(c.u).unwrap() >= k);
            prop_assert!(c.u.difference(c.s).vertices().all(|v| !x.contains(c.s.with(v))));
        }
    }

    #[test]
    fn witness_search_matches_subset_scan(seed in any::<u64>(), full in any::<bool>()) {
        let Some(TheoremInstance { complex: x, matroid: mat, m, k, .. }) = instance(seed, false) else {
            return Ok(());
        };
        let conclusion = if full { Conclusion::Full } else { Conclusion::ComplementOnly };
        let found = find_witness(&x, &mat, m, k, conclusion, 16).unwrap();
        let oracle = witness_by_subsets(&x, &mat, m, k, full).unwrap();
        prop_assert_eq!(found.as_ref().map(|w| w.tau), oracle);
        if let Some(w) = found {
            prop_assert!(verify_witness(&x, &mat, m, k, conclusion, &w));
        }
    }

    #[test]
    fn hypotheses_form_a_chain(seed in any::<u64>(), leray in any::<bool>()) {
        let Some(TheoremInstance { complex: x, matroid: mat, d, m, k }) = instance(seed, leray) else {
            return Ok(());
        };
        let s = hypothesis_strong(&x, &mat, d, m, k).unwrap().holds;
        let l = hypothesis_leray(&x, &mat, d, m, k).unwrap().holds;
        let c = hypothesis_collapsible(&x, &mat, d, m, k).unwrap().holds;
        prop_assert!(!s || l);
        prop_assert!(!l || c);
        if m <= 2 {
            prop_assert!(s == l && l == c);
        }
    }

    #[test]
    fn collapsible_hypothesis_gives_full_witness(seed in any::<u64>()) {
        let Some(TheoremInstance { complex: x, matroid: mat, d, m, k }) = instance(seed, false) else {
            return Ok(());
        };
        if hypothesis_collapsible(&x, &mat, d, m, k).unwrap().holds {
            prop_assert!(find_witness(&x, &mat, m, k, Conclusion::Full, 16).unwrap().is_some());
        }
    }

    #[test]
    fn leray_hypothesis_gives_relaxed_witness(seed in any::<u64>()) {
        let Some(TheoremInstance { complex: x, matroid: mat, d, m, k }) = instance(seed, true) else {
            return Ok(());
        };
        prop_assume!(is_d_leray_induced(&x, d, Field::Rationals, 12).unwrap().holds);
        if hypothesis_leray(&x, &mat, d, m, k).unwrap().holds {
            prop_assert!(find_witness(&x, &mat, m, k, Conclusion::ComplementOnly, 16).unwrap().is_some());
        }
    }

    #[test]
    fn cofacial_sets_extend(seed in any::<u64>()) {
        let Some(TheoremInstance { complex: x, d, .. }) = instance(seed, true) else {
            return Ok(());
        };
        prop_assume!(is_d_leray_induced(&x, d, Field::Rationals, 12).unwrap().holds);
        let n = x.vertex_set().max_vertex().map_or(0, |v| v + 1);
        for a in Simplex::range(n).subsets_of_size(d + 1) {
            if let Some(ok) = cofacial_extension_holds(&x, a) {
                prop_assert!(ok);
            }
        }
    }
}
