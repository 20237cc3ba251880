#![allow(dead_code)]

use std::collections::BTreeSet;

use degseq::{all_sequences, is_graphic, DegreeSequence, LabeledGraph};

pub fn seq(v: &[i64]) -> DegreeSequence {
    DegreeSequence::new(v).unwrap()
}

pub fn graphic_sequences(n: usize) -> Vec<DegreeSequence> {
    all_sequences(n)
        .filter(|d| is_graphic(&d.to_int_list()))
        .collect()
}

/// Every graphic sequence with `1 <= n <= max_n`.
pub fn graphic_up_to(max_n: usize) -> Vec<DegreeSequence> {
    (1..=max_n).flat_map(graphic_sequences).collect()
}

/// Havel–Hakimi decision, independent of the Erdős–Gallai code.
pub fn havel_hakimi(raw: &[i64]) -> bool {
    let mut v: Vec<i64> = raw.to_vec();
    loop {
        if v.iter().any(|&t| t < 0) {
            return false;
        }
        v.sort_unstable_by(|a, b| b.cmp(a));
        let Some(&top) = v.first() else { return true };
        if top == 0 {
            return true;
        }
        let top = top as usize;
        if top >= v.len() {
            return false;
        }
        v.remove(0);
        for t in v.iter_mut().take(top) {
            *t -= 1;
        }
    }
}

/// Brute-force split test: some clique whose complement is independent.
pub fn graph_is_split(g: &LabeledGraph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let inside = |v: usize| mask & (1 << (v - 1)) != 0;
        g.edges().all(|(a, b)| inside(a) || inside(b))
            && (1..=n).all(|a| (a + 1..=n).all(|b| !(inside(a) && inside(b)) || g.has_edge(a, b)))
    })
}

/// Brute-force test for a nontrivial composition `(H, A, B) ∘ G0`: a proper
/// nonempty vertex set whose members are each joined to all or none of the
/// remaining vertices, the "all" ones forming a clique and the "none" ones
/// an independent set.
pub fn graph_is_decomposable(g: &LabeledGraph) -> bool {
    let n = g.n();
    if n < 2 {
        return false;
    }
    (1u32..(1 << n) - 1).any(|mask| {
        let inside = |v: usize| mask & (1 << (v - 1)) != 0;
        let rest: Vec<usize> = (1..=n).filter(|&v| !inside(v)).collect();
        let mut clique = BTreeSet::new();
        let mut independent = BTreeSet::new();
        for v in (1..=n).filter(|&v| inside(v)) {
            let hits = rest.iter().filter(|&&u| g.has_edge(u, v)).count();
            if hits == rest.len() {
                clique.insert(v);
            } else if hits == 0 {
                independent.insert(v);
            } else {
                return false;
            }
        }
        let pairs = |s: &BTreeSet<usize>| {
            s.iter()
                .flat_map(|&a| s.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
                .collect::<Vec<_>>()
        };
        pairs(&clique).iter().all(|&(a, b)| g.has_edge(a, b))
            && pairs(&independent).iter().all(|&(a, b)| !g.has_edge(a, b))
    })
}
