mod common;

use helly_core::{Simplex, SimplicialComplex};
use proptest::prelude::*;

fn shift(x: &SimplicialComplex, by: usize) -> SimplicialComplex {
    let move_up = |s: Simplex| Simplex::from_bits(s.bits() << by);
    SimplicialComplex::new(
        move_up(x.vertex_set()),
        x.facets().iter().map(|&f| move_up(f)),
    )
    .unwrap()
}

proptest! {
    #[test]
    fn faces_are_downward_closed(x in common::complex(7, 6)) {
        for f in x.faces(None) {
            for g in f.subsets() {
                prop_assert!(x.is_face(g).unwrap());
            }
        }
    }

    #[test]
    fn facets_form_an_antichain(x in common::complex(7, 8), mask in any::<u64>()) {
        let u = Simplex::from_bits(mask & x.vertex_set().bits());
        let sub = x.induced(u).unwrap();
        for (i, a) in sub.facets().iter().enumerate() {
            prop_assert!(a.is_subset(u));
            for (j, b) in sub.facets().iter().enumerate() {
                prop_assert!(i == j || !a.is_subset(*b));
            }
        }
    }

    #[test]
    fn vertex_deletion_is_costar_and_induced(x in common::complex(7, 6), v in 0usize..7) {
        prop_assume!(x.vertex_set().contains(v));
        let costar = x.costar(Simplex::of(&[v]));
        let induced = x.induced(x.vertex_set().without(v)).unwrap();
        prop_assert!(costar.same_faces(&induced));
        prop_assert!(x.delete_vertex(v).unwrap().same_faces(&induced));
    }

    #[test]
    fn link_faces_complete_to_faces(x in common::complex(6, 6), mask in any::<u64>()) {
        let sigma = Simplex::from_bits(mask & x.vertex_set().bits());
        prop_assume!(x.contains(sigma));
        let lk = x.link(sigma).unwrap();
        for f in x.faces(None) {
            let in_link = f.is_disjoint(sigma) && x.contains(f.union(sigma));
            prop_assert_eq!(lk.contains(f), in_link);
        }
    }

    #[test]
    fn join_is_commutative_and_associative(
        a in common::complex(3, 3),
        b in common::complex(3, 3),
        c in common::complex(3, 3),
    ) {
        let b = shift(&b, 3);
        let c = shift(&c, 6);
        let ab = a.join(&b).unwrap();
        prop_assert!(ab.same_faces(&b.join(&a).unwrap()));
        let left = ab.join(&c).unwrap();
        let right = a.join(&b.join(&c).unwrap()).unwrap();
        prop_assert!(left.same_faces(&right));
    }

    #[test]
    fn boundary_face_count(n in 1usize..=8) {
        let bd = SimplicialComplex::boundary_complex(Simplex::range(n)).unwrap();
        prop_assert_eq!(bd.face_count(), (1usize << n) - 1);
        prop_assert!(!bd.contains(Simplex::range(n)));
    }
}
