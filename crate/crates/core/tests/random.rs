//! Randomized checks on sequences too large to enumerate.

use degseq::*;
use proptest::prelude::*;

/// A graphic sequence from the degrees of a random graph on up to 64
/// vertices with edge density `p`.
fn random_graphic() -> impl Strategy<Value = DegreeSequence> {
    (1usize..=64, 0.0f64..1.0, any::<u64>()).prop_map(|(n, p, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut g = LabeledGraph::empty(n);
        for a in 1..=n {
            for b in a + 1..=n {
                if rng.gen_bool(p) {
                    g.add_edge(a, b);
                }
            }
        }
        DegreeSequence::normalized(&g.degrees().iter().map(|&t| t as i64).collect::<Vec<_>>())
            .unwrap()
    })
}

/// Sequences near the split boundary, where forced pairs are common.
fn random_split_like() -> impl Strategy<Value = DegreeSequence> {
    (2usize..=40, any::<u64>()).prop_map(|(n, seed)| {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let k = rng.gen_range(1..n);
        let mut g = LabeledGraph::empty(n);
        for a in 1..=k {
            for b in a + 1..=k {
                g.add_edge(a, b);
            }
            for b in k + 1..=n {
                if rng.gen_bool(0.5) {
                    g.add_edge(a, b);
                }
            }
        }
        // A few extra edges inside the independent side.
        for _ in 0..rng.gen_range(0..3) {
            let a = rng.gen_range(k + 1..=n);
            let b = rng.gen_range(k + 1..=n);
            if a != b {
                g.add_edge(a, b);
            }
        }
        DegreeSequence::normalized(&g.degrees().iter().map(|&t| t as i64).collect::<Vec<_>>())
            .unwrap()
    })
}

fn check(d: &DegreeSequence) -> std::result::Result<(), TestCaseError> {
    let fast = classification_matrix(d, Method::Deltas).unwrap();
    let slow = classification_matrix(d, Method::Graphicality).unwrap();
    prop_assert_eq!(&fast, &slow);
    prop_assert!(fast.interval_violation(d).is_none());
    let i = intersection_envelope(d).unwrap();
    let u = union_envelope(d).unwrap();
    prop_assert_eq!(i.composed_graph(), i.graph.clone());
    prop_assert_eq!(u.composed_graph(), u.graph.clone());
    prop_assert!(find_alternating_four_cycle(&i.graph).is_none());
    prop_assert!(find_alternating_four_cycle(&u.graph).is_none());
    let g = realize(d).unwrap();
    prop_assert!(i.graph.is_subgraph_of(&g) && g.is_subgraph_of(&u.graph));
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn methods_agree_on_random_graphs(d in random_graphic()) {
        check(&d)?;
    }

    #[test]
    fn methods_agree_near_split(d in random_split_like()) {
        check(&d)?;
    }

    #[test]
    fn lift_reaches_a_target(d in random_split_like()) {
        match lift_to_decomposable(&d) {
            Ok(r) => {
                prop_assert!(r.step_count() <= 3);
                prop_assert!(!r.fallback);
                prop_assert!(majorizes(r.target.terms(), d.terms()));
                prop_assert!(is_split_sequence(&r.target).unwrap() || is_decomposable_sequence(&r.target).unwrap());
            }
            Err(Error::NoForcedStructure) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn parse_round_trip(v in proptest::collection::vec(0usize..30, 0..50)) {
        let text = notation::format_compact(&v);
        let back: Vec<usize> = notation::parse_list(&text).unwrap().into_iter().map(|t| t as usize).collect();
        prop_assert_eq!(back, v);
    }
}
