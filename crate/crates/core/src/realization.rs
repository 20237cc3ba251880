//! Constructing and exhaustively enumerating labeled realizations.
//!
//! The enumeration here is the brute-force oracle every fast path in the
//! crate is checked against, so it knows nothing about Erdős–Gallai
//! differences beyond the initial graphicality gate.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::forced::{ClassificationMatrix, PairClass};
use crate::graph::LabeledGraph;
use crate::graphicality::is_graphic;
use crate::sequence::DegreeSequence;

/// Default largest `n` the enumeration oracle accepts.
pub const DEFAULT_CAP: usize = 10;

/// Hard ceiling on the enumeration cap: adjacency rows are 64-bit masks.
pub const MAX_CAP: usize = 64;

/// Every labeled realization of a sequence, sorted by edge list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizationSet {
    pub sequence: DegreeSequence,
    pub graphs: Vec<LabeledGraph>,
}

impl RealizationSet {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }
}

/// Edge sets common to, and covered by, every realization, along with the
/// pair classification those imply.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub count: u64,
    pub matrix: ClassificationMatrix,
    pub intersection: LabeledGraph,
    pub union: LabeledGraph,
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    if is_graphic(&d.to_int_list()) {
        Ok(())
    } else {
        Err(Error::NotGraphic)
    }
}

/// One realization, built greedily: the vertex with the largest residual
/// degree is joined to the next largest ones. Ties go to the smaller label.
pub fn realize(d: &DegreeSequence) -> Result<LabeledGraph> {
    require_graphic(d)?;
    let n = d.len();
    let mut residual: Vec<usize> = d.terms().to_vec();
    let mut g = LabeledGraph::empty(n);
    let mut order: Vec<usize> = (0..n).collect();
    loop {
        order.sort_by(|&a, &b| residual[b].cmp(&residual[a]).then(a.cmp(&b)));
        let v = order[0];
        let need = residual[v];
        if need == 0 {
            break;
        }
        residual[v] = 0;
        let targets: Vec<usize> = order[1..].iter().copied().take(need).collect();
        if targets.len() < need {
            return Err(Error::Internal(format!(
                "greedy realization of {d} ran short"
            )));
        }
        for u in targets {
            if residual[u] == 0 || !g.add_edge(v + 1, u + 1) {
                return Err(Error::Internal(format!(
                    "greedy realization of {d} got stuck"
                )));
            }
            residual[u] -= 1;
        }
    }
    Ok(g)
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(MAX_CAP);
    if n > cap {
        Err(Error::TooLarge { n, cap })
    } else {
        Ok(())
    }
}

/// Calls `visit` with the adjacency masks of every labeled realization.
fn for_each_realization(
    d: &DegreeSequence,
    cap: usize,
    mut visit: impl FnMut(&[u64]),
) -> Result<()> {
    require_graphic(d)?;
    let n = d.len();
    check_cap(n, cap)?;
    let mut search = Search {
        n,
        residual: d.terms().to_vec(),
        adj: vec![0; n],
    };
    search.run(0, 1, &mut visit);
    Ok(())
}

struct Search {
    n: usize,
    residual: Vec<usize>,
    adj: Vec<u64>,
}

impl Search {
    // Decide pair (i, j) (0-based, i < j), then move on in lexicographic order.
    fn run(&mut self, i: usize, j: usize, visit: &mut impl FnMut(&[u64])) {
        let n = self.n;
        if j >= n {
            // Row i is complete; it must be saturated.
            if i < n && self.residual[i] != 0 {
                return;
            }
            if i + 2 >= n {
                if i + 1 < n && self.residual[i + 1] != 0 {
                    return;
                }
                visit(&self.adj);
                return;
            }
            self.run(i + 1, i + 2, visit);
            return;
        }
        // Pairs still open for i after this one: (i, j+1..n).
        let left_for_i = n - 1 - j;
        // Pairs still open for j after this one: (i+1..j, j) and (j, j+1..n).
        let left_for_j = n - i - 2;

        if self.residual[i] > 0 && self.residual[j] > 0 {
            self.residual[i] -= 1;
            self.residual[j] -= 1;
            if self.residual[i] <= left_for_i && self.residual[j] <= left_for_j {
                self.adj[i] |= 1 << j;
                self.adj[j] |= 1 << i;
                self.run(i, j + 1, visit);
                self.adj[i] &= !(1 << j);
                self.adj[j] &= !(1 << i);
            }
            self.residual[i] += 1;
            self.residual[j] += 1;
        }
        if self.residual[i] <= left_for_i && self.residual[j] <= left_for_j {
            self.run(i, j + 1, visit);
        }
    }
}

fn graph_from_masks(adj: &[u64]) -> LabeledGraph {
    let n = adj.len();
    let mut g = LabeledGraph::empty(n);
    for (i, &row) in adj.iter().enumerate() {
        for j in i + 1..n {
            if row >> j & 1 == 1 {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    g
}

/// All labeled realizations of `d`, for `n <= cap`.
pub fn enumerate_realizations(d: &DegreeSequence, cap: usize) -> Result<RealizationSet> {
    let mut graphs = Vec::new();
    for_each_realization(d, cap, |adj| graphs.push(graph_from_masks(adj)))?;
    graphs.sort();
    Ok(RealizationSet {
        sequence: d.clone(),
        graphs,
    })
}

/// Number of labeled realizations of `d`, without materializing them.
pub fn count_realizations(d: &DegreeSequence, cap: usize) -> Result<u64> {
    let mut count = 0;
    for_each_realization(d, cap, |_| count += 1)?;
    Ok(count)
}

/// Forced-pair classification by brute force over all realizations.
pub fn forced_pairs_oracle(d: &DegreeSequence, cap: usize) -> Result<OracleReport> {
    let n = d.len();
    let full: u64 = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    let mut inter = vec![full; n];
    let mut uni = vec![0u64; n];
    let mut count = 0u64;
    for_each_realization(d, cap, |adj| {
        count += 1;
        for v in 0..n {
            inter[v] &= adj[v];
            uni[v] |= adj[v];
        }
    })?;
    if count == 0 {
        return Err(Error::Internal(format!(
            "no realization found for graphic {d}"
        )));
    }
    let matrix = ClassificationMatrix::from_fn(n, |i, j| {
        let bit = 1u64 << (j - 1);
        if inter[i - 1] & bit != 0 {
            PairClass::ForcedEdge
        } else if uni[i - 1] & bit == 0 {
            PairClass::ForcedNonEdge
        } else {
            PairClass::Unforced
        }
    });
    Ok(OracleReport {
        count,
        matrix,
        intersection: graph_from_masks(&inter),
        union: graph_from_masks(&uni),
    })
}

/// Lexicographically least `(a, b, c, d)` with `ab`, `cd` edges and `ad`,
/// `bc` non-edges. None exactly when the graph is threshold.
pub fn find_alternating_four_cycle(g: &LabeledGraph) -> Option<(usize, usize, usize, usize)> {
    let n = g.n();
    let adj = g.adjacency();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&u| adj[v][u]).collect())
        .collect();
    for a in 0..n {
        for &b in &nbrs[a] {
            for c in 0..n {
                if c == a || c == b || adj[b][c] {
                    continue;
                }
                for &dd in &nbrs[c] {
                    if dd != a && dd != b && !adj[a][dd] {
                        return Some((a + 1, b + 1, c + 1, dd + 1));
                    }
                }
            }
        }
    }
    None
}

/// Applies the degree-preserving switch on an alternating 4-cycle witness:
/// removes `ab`, `cd` and adds `ad`, `bc`.
pub fn switch_alternating(
    g: &LabeledGraph,
    (a, b, c, d): (usize, usize, usize, usize),
) -> Result<LabeledGraph> {
    if !(g.has_edge(a, b) && g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, c)) {
        return Err(Error::InvalidPartition(format!(
            "({a}, {b}, {c}, {d}) is not an alternating 4-cycle"
        )));
    }
    let mut h = g.clone();
    h.remove_edge(a, b);
    h.remove_edge(c, d);
    h.add_edge(a, d);
    h.add_edge(b, c);
    Ok(h)
}

/// Erdős–Gallai difference computed by counting edges in a realization.
///
/// `B = {1..k}`; `c_choice` is `C`, and `A` is everything else after `k`.
/// Members of `A` need degree at most `k`, members of `C` at least `k`.
/// Returns `2e(A) + 2ē(B) + e(A,C) + ē(B,C)`.
pub fn delta_by_partition_counts(
    g: &LabeledGraph,
    d: &DegreeSequence,
    k: usize,
    c_choice: &BTreeSet<usize>,
) -> Result<i64> {
    let n = d.len();
    if g.n() != n || g.degrees() != d.terms() {
        return Err(Error::InvalidPartition(format!(
            "graph does not realize {d}"
        )));
    }
    if k > n {
        return Err(Error::InvalidPartition(format!("k = {k} exceeds n = {n}")));
    }
    for &v in c_choice {
        if v <= k || v > n {
            return Err(Error::InvalidPartition(format!("{v} is not in {{k+1..n}}")));
        }
        if d.degree(v) < k {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} in C has degree {} < {k}",
                d.degree(v)
            )));
        }
    }
    let a_set: Vec<usize> = (k + 1..=n).filter(|v| !c_choice.contains(v)).collect();
    if let Some(&v) = a_set.iter().find(|&&v| d.degree(v) > k) {
        return Err(Error::InvalidPartition(format!(
            "vertex {v} in A has degree {} > {k}",
            d.degree(v)
        )));
    }
    let b_set: Vec<usize> = (1..=k).collect();
    let c_set: Vec<usize> = c_choice.iter().copied().collect();

    let within = |s: &[usize], edge: bool| -> i64 {
        let mut count = 0;
        for (x, &u) in s.iter().enumerate() {
            for &v in &s[x + 1..] {
                if g.has_edge(u, v) == edge {
                    count += 1;
                }
            }
        }
        count
    };
    let across = |s: &[usize], t: &[usize], edge: bool| -> i64 {
        let mut count = 0;
        for &u in s {
            for &v in t {
                if g.has_edge(u, v) == edge {
                    count += 1;
                }
            }
        }
        count
    };
    Ok(2 * within(&a_set, true)
        + 2 * within(&b_set, false)
        + across(&a_set, &c_set, true)
        + across(&b_set, &c_set, false))
}
