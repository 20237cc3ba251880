//! Alternating 4-cycle switches connect all realizations of a sequence.

mod common;

use std::collections::BTreeSet;

use common::graphic_up_to;
use degseq::realization::DEFAULT_CAP;
use degseq::*;
use rayon::prelude::*;

/// Every alternating 4-cycle of `g`, not just the least one.
fn all_switches(g: &LabeledGraph) -> Vec<LabeledGraph> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                for d in 1..=n {
                    if BTreeSet::from([a, b, c, d]).len() == 4 {
                        if let Ok(h) = switch_alternating(g, (a, b, c, d)) {
                            out.push(h);
                        }
                    }
                }
            }
        }
    }
    out
}

#[test]
fn realizations_are_switch_connected_and_closed() {
    graphic_up_to(6).par_iter().for_each(|d| {
        let all: BTreeSet<LabeledGraph> = enumerate_realizations(d, DEFAULT_CAP)
            .unwrap()
            .graphs
            .into_iter()
            .collect();
        let start = realize(d).unwrap();
        assert!(all.contains(&start), "{d}");
        let mut seen = BTreeSet::from([start.clone()]);
        let mut stack = vec![start];
        while let Some(g) = stack.pop() {
            for h in all_switches(&g) {
                assert!(all.contains(&h), "{d}: switch left the realization set");
                if seen.insert(h.clone()) {
                    stack.push(h);
                }
            }
        }
        assert_eq!(seen, all, "{d}");
        let threshold = is_threshold_sequence(d).unwrap();
        for g in &all {
            assert_eq!(find_alternating_four_cycle(g).is_none(), threshold, "{d}");
        }
    });
}

#[test]
fn switch_rejects_non_witness() {
    let g = LabeledGraph::from_edges(4, [(1, 2), (3, 4)]).unwrap();
    assert!(switch_alternating(&g, (1, 2, 3, 4)).is_ok());
    assert!(switch_alternating(&g, (1, 3, 2, 4)).is_err());
}
