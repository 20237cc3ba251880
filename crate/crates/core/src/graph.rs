//! Labeled simple graphs and threshold creation sequences.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple undirected graph on the vertex set `1..=n`.
///
/// Edges are stored normalized as `(i, j)` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl LabeledGraph {
    pub fn empty(n: usize) -> Self {
        LabeledGraph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for i in 1..=n {
            for j in i + 1..=n {
                g.edges.insert((i, j));
            }
        }
        g
    }

    /// Builds a graph from an edge list, rejecting loops and labels outside `1..=n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n);
        for (a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return Err(Error::BadPair { i: a, j: b, n });
            }
            g.edges.insert((a.min(b), a.max(b)));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Inserts `{a, b}`; returns whether it was new. Panics on a loop or bad label.
    pub fn add_edge(&mut self, a: usize, b: usize) -> bool {
        assert!(a != b && (1..=self.n).contains(&a) && (1..=self.n).contains(&b));
        self.edges.insert((a.min(b), a.max(b)))
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        self.edges.remove(&(a.min(b), a.max(b)))
    }

    /// Degree of each vertex, indexed by `label - 1`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(a, b) in &self.edges {
            deg[a - 1] += 1;
            deg[b - 1] += 1;
        }
        deg
    }

    /// Degrees sorted nonincreasing; an isomorphism invariant.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut deg = self.degrees();
        deg.sort_unstable_by(|a, b| b.cmp(a));
        deg
    }

    /// Dense adjacency matrix, indexed by `label - 1`.
    pub fn adjacency(&self) -> Vec<Vec<bool>> {
        let mut adj = vec![vec![false; self.n]; self.n];
        for &(a, b) in &self.edges {
            adj[a - 1][b - 1] = true;
            adj[b - 1][a - 1] = true;
        }
        adj
    }

    pub fn is_subgraph_of(&self, other: &LabeledGraph) -> bool {
        self.n == other.n && self.edges.is_subset(&other.edges)
    }

    /// Graphviz rendering, `graph G { 1 -- 2; ... }`. Vertices without an
    /// incident edge are listed as bare nodes so the vertex set survives.
    pub fn to_dot(&self) -> String {
        let deg = self.degrees();
        let mut out = String::from("graph G {\n");
        for (idx, &d) in deg.iter().enumerate() {
            if d == 0 {
                out.push_str(&format!("  {};\n", idx + 1));
            }
        }
        for &(a, b) in &self.edges {
            out.push_str(&format!("  {a} -- {b};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// One step of a threshold-graph construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Step {
    /// New vertex adjacent to nothing built so far.
    Isolated,
    /// New vertex adjacent to everything built so far.
    Dominating,
}

impl Step {
    pub fn symbol(self) -> char {
        match self {
            Step::Isolated => 'I',
            Step::Dominating => 'D',
        }
    }
}

/// Build recipe for a threshold graph, applied left to right.
///
/// Written as a string over `{I, D}` in build order. The first step's kind
/// does not matter for the resulting graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CreationSequence {
    steps: Vec<Step>,
}

impl CreationSequence {
    pub fn new(steps: Vec<Step>) -> Self {
        CreationSequence { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub(crate) fn push_run(&mut self, step: Step, count: usize) {
        self.steps.extend(std::iter::repeat_n(step, count));
    }

    /// Same graph, with the immaterial first step written as `Isolated`.
    pub fn canonical(&self) -> CreationSequence {
        let mut steps = self.steps.clone();
        if let Some(first) = steps.first_mut() {
            *first = Step::Isolated;
        }
        CreationSequence { steps }
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'I' | 'i' => Ok(Step::Isolated),
                'D' | 'd' => Ok(Step::Dominating),
                other => Err(Error::Parse(format!(
                    "creation step must be I or D, got {other:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()
            .map(CreationSequence::new)
    }
}

impl TryFrom<String> for CreationSequence {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CreationSequence> for String {
    fn from(c: CreationSequence) -> Self {
        c.to_string()
    }
}

/// Builds the threshold graph described by `creation`.
///
/// Vertices are relabeled so degrees are nonincreasing in the label; ties
/// keep creation order.
pub fn build_threshold_graph(creation: &CreationSequence) -> Result<LabeledGraph> {
    let n = creation.len();
    if n == 0 {
        return Err(Error::EmptyCreation);
    }
    // A vertex created at step t is adjacent to a later vertex s exactly
    // when step s is Dominating.
    let steps = creation.steps();
    let mut deg = vec![0usize; n];
    let mut later_dominating = 0;
    for t in (0..n).rev() {
        deg[t] += later_dominating;
        if steps[t] == Step::Dominating {
            deg[t] += t;
            later_dominating += 1;
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| deg[b].cmp(&deg[a]).then(a.cmp(&b)));
    let mut label = vec![0usize; n];
    for (pos, &t) in order.iter().enumerate() {
        label[t] = pos + 1;
    }
    let mut g = LabeledGraph::empty(n);
    for s in 1..n {
        if steps[s] == Step::Dominating {
            for t in 0..s {
                g.add_edge(label[t], label[s]);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn creation(s: &str) -> CreationSequence {
        s.parse().unwrap()
    }

    #[test]
    fn single_vertex() {
        let g = build_threshold_graph(&creation("I")).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn second_vertex_dominates_first() {
        let g = build_threshold_graph(&creation("ID")).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn mixed_creation_degrees() {
        let g = build_threshold_graph(&creation("IIIIDDIII")).unwrap();
        assert_eq!(g.degrees(), vec![5, 5, 2, 2, 2, 2, 0, 0, 0]);
    }

    #[test]
    fn empty_creation_rejected() {
        assert_eq!(
            build_threshold_graph(&CreationSequence::default()),
            Err(Error::EmptyCreation)
        );
    }

    #[test]
    fn first_step_is_immaterial() {
        for s in ["DDIID", "IDIID"] {
            let g = build_threshold_graph(&creation(s)).unwrap();
            assert_eq!(g.degrees(), vec![4, 2, 2, 1, 1]);
        }
        assert_eq!(creation("DDI").canonical().to_string(), "IDI");
    }

    #[test]
    fn dot_lists_isolated_vertices() {
        let g = LabeledGraph::from_edges(3, [(2, 1)]).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  3;\n  1 -- 2;\n}\n");
    }

    #[test]
    fn from_edges_rejects_loops() {
        assert!(LabeledGraph::from_edges(3, [(2, 2)]).is_err());
        assert!(LabeledGraph::from_edges(3, [(1, 4)]).is_err());
    }
}
