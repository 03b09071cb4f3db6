mod common;

use std::collections::BTreeSet;

use common::{closure_fixpoint, Pairs};
use proptest::prelude::*;
use scholarnet_core::{Relation, UndirectedGraph};

fn arb_pairs() -> impl Strategy<Value = Vec<(u8, u8)>> {
    prop::collection::vec((0u8..12, 0u8..12), 0..30)
}

fn to_rel(pairs: &[(u8, u8)]) -> Relation<u8> {
    pairs.iter().copied().collect()
}

fn to_strings(r: &Relation<u8>) -> Pairs {
    r.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

proptest! {
    #[test]
    fn inverse_is_involution(pairs in arb_pairs()) {
        let r = to_rel(&pairs);
        prop_assert_eq!(r.inverse().inverse(), r);
    }

    #[test]
    fn image_distributes_over_union(
        pairs in arb_pairs(),
        s1 in prop::collection::btree_set(0u8..12, 0..6),
        s2 in prop::collection::btree_set(0u8..12, 0..6),
    ) {
        let r = to_rel(&pairs);
        let both: BTreeSet<u8> = s1.union(&s2).copied().collect();
        let split: BTreeSet<u8> = r.image(&s1).union(&r.image(&s2)).copied().collect();
        prop_assert_eq!(r.image(&both), split);
    }

    #[test]
    fn restrictions_filter_pairs(pairs in arb_pairs(), s in prop::collection::btree_set(0u8..12, 0..6)) {
        let r = to_rel(&pairs);
        let d = r.dom_restrict(&s);
        let g = r.range_restrict(&s);
        prop_assert!(d.is_subset(&r) && g.is_subset(&r));
        prop_assert!(d.iter().all(|(a, _)| s.contains(a)));
        prop_assert!(g.iter().all(|(_, b)| s.contains(b)));
        prop_assert_eq!(d.len(), r.iter().filter(|(a, _)| s.contains(a)).count());
        prop_assert_eq!(g.len(), r.iter().filter(|(_, b)| s.contains(b)).count());
    }

    #[test]
    fn closure_matches_fixpoint_oracle(pairs in arb_pairs()) {
        let r = to_rel(&pairs);
        let tc = r.transitive_closure();
        prop_assert_eq!(to_strings(&tc), closure_fixpoint(&to_strings(&r)));
    }

    #[test]
    fn closure_laws(pairs in arb_pairs()) {
        let r = to_rel(&pairs);
        let tc = r.transitive_closure();
        prop_assert_eq!(tc.transitive_closure(), tc.clone());
        prop_assert!(r.is_subset(&tc));
        prop_assert!(tc.compose(&tc).is_subset(&tc));
    }

    #[test]
    fn closure_preserves_symmetry(pairs in arb_pairs()) {
        let r = to_rel(&pairs);
        let sym = r.union(&r.inverse());
        prop_assert!(sym.transitive_closure().is_symmetric());
    }

    #[test]
    fn undirected_predicates(pairs in arb_pairs()) {
        let (g, dropped) = UndirectedGraph::make_undirected(pairs.iter().copied());
        let rel = g.relation();
        prop_assert_eq!(rel.inverse(), rel.clone());
        prop_assert!(rel.iter().all(|(a, b)| a != b));
        let selfs: BTreeSet<u8> = pairs.iter().filter(|(a, b)| a == b).map(|p| p.0).collect();
        prop_assert_eq!(dropped, selfs.len());
        prop_assert_eq!(g.reachability(), rel.transitive_closure().without_identity());
    }
}
