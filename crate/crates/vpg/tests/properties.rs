//! Randomized invariants of the public API, independent of any particular
//! corpus: certificate validity, heredity of acceptance, stability under
//! relabeling, and representation round-trips.

use proptest::prelude::*;

use vpg::classes::{decide_contact, ClassError, ClassHint};
use vpg::graph::Graph;
use vpg::layouts::represent_any;
use vpg::recognize::Decision;
use vpg::rep::GridRepresentation;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let bits = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << bits)).prop_map(|(n, mask)| {
            let mut edges = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if mask >> k & 1 == 1 {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn supported_decision(g: &Graph) -> Option<Decision> {
    match decide_contact(g, ClassHint::Auto) {
        Ok(d) => Some(d),
        Err(ClassError::NoSupportedClass) => None,
        Err(e) => panic!("unexpected decision error: {e}"),
    }
}

proptest! {
    /// Every NO carries a witness that embeds in the refuted graph; every
    /// YES admits a constructed layout that validates.
    #[test]
    fn verdicts_carry_checkable_certificates(g in arb_graph(7)) {
        match supported_decision(&g) {
            Some(Decision::No(w)) => prop_assert!(w.validate(&g)),
            Some(Decision::Yes(_)) => {
                let rep = represent_any(&g).unwrap();
                prop_assert!(rep.is_valid(&g));
            }
            None => {}
        }
    }

    /// Contact layouts restrict to induced subgraphs, so acceptance is
    /// hereditary: deleting any vertex of an accepted graph keeps it
    /// accepted (the supported classes are themselves hereditary).
    #[test]
    fn acceptance_is_hereditary(g in arb_graph(7), pick in any::<proptest::sample::Index>()) {
        if g.vertex_count() > 1 {
            if let Some(Decision::Yes(_)) = supported_decision(&g) {
                let v = pick.index(g.vertex_count());
                let keep: Vec<usize> = g.vertices().filter(|&u| u != v).collect();
                let (sub, _) = g.induced_subgraph(&keep).unwrap();
                let d = supported_decision(&sub).expect("classes are hereditary");
                prop_assert!(d.is_yes());
            }
        }
    }

    /// Verdicts depend only on the graph, not its labeling.
    #[test]
    fn verdicts_are_isomorphism_invariant(g in arb_graph(6), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates driven by the seed.
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let edges: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        let a = supported_decision(&g).map(|d| d.is_yes());
        let b = supported_decision(&h).map(|d| d.is_yes());
        prop_assert_eq!(a, b);
    }

    /// Emitted layouts survive a serialization round trip and re-validate.
    #[test]
    fn layouts_round_trip_through_json(g in arb_graph(7)) {
        if let Some(Decision::Yes(_)) = supported_decision(&g) {
            let rep = represent_any(&g).unwrap();
            let back = GridRepresentation::from_json(&rep.to_json()).unwrap();
            prop_assert_eq!(&back, &rep);
            prop_assert!(back.is_valid(&g));
        }
    }
}
