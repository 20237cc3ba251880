//! Forced edges and forced non-edges of a degree sequence.
//!
//! A pair `{i, j}` is a forced edge when it is adjacent in every realization
//! and a forced non-edge when it is adjacent in none. Two independent
//! classifiers are provided: one perturbs the sequence and retests
//! graphicality, the other reads the answer off the Erdős–Gallai differences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::graphicality::{eg_profile, is_graphic, EgProfile};
use crate::sequence::DegreeSequence;

/// Adjacency verdict for a vertex pair across all realizations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairClass {
    ForcedEdge,
    ForcedNonEdge,
    Unforced,
}

impl PairClass {
    pub fn is_forced(self) -> bool {
        self != PairClass::Unforced
    }

    /// One-character cell for text grids.
    pub fn symbol(self) -> char {
        match self {
            PairClass::ForcedEdge => 'E',
            PairClass::ForcedNonEdge => 'N',
            PairClass::Unforced => '.',
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PairClass::ForcedEdge => "ForcedEdge",
            PairClass::ForcedNonEdge => "ForcedNonEdge",
            PairClass::Unforced => "Unforced",
        };
        f.write_str(s)
    }
}

/// Which classifier backs [`classification_matrix`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Erdős–Gallai difference conditions; one profile for all pairs.
    #[default]
    Deltas,
    /// Graphicality of the two perturbed sequences, per pair.
    Graphicality,
}

/// A [`PairClass`] for every unordered pair `{i, j}` of `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationMatrix {
    n: usize,
    // Pairs in lexicographic order (1,2), (1,3), ..., (n-1,n).
    entries: Vec<PairClass>,
}

impl ClassificationMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> PairClass) -> Self {
        let mut entries = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 1..=n {
            for j in i + 1..=n {
                entries.push(f(i, j));
            }
        }
        ClassificationMatrix { n, entries }
    }

    pub(crate) fn try_from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> Result<PairClass>,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 1..=n {
            for j in i + 1..=n {
                entries.push(f(i, j)?);
            }
        }
        Ok(ClassificationMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        assert!(
            i >= 1 && i < j && j <= self.n,
            "pair ({i}, {j}) out of range"
        );
        (i - 1) * self.n - (i - 1) * i / 2 + (j - i - 1)
    }

    /// Class of `{i, j}`; symmetric in its arguments. Panics on a bad pair.
    pub fn get(&self, i: usize, j: usize) -> PairClass {
        self.entries[self.index(i, j)]
    }

    /// `(i, j, class)` with `i < j`, in lexicographic pair order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, PairClass)> + '_ {
        let n = self.n;
        (1..=n)
            .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(self.entries.iter().copied())
            .map(|((i, j), c)| (i, j, c))
    }

    pub fn count(&self, class: PairClass) -> usize {
        self.entries.iter().filter(|&&c| c == class).count()
    }

    pub fn all_forced(&self) -> bool {
        self.entries.iter().all(|c| c.is_forced())
    }

    /// Graph whose edges are the forced edges.
    pub fn forced_edge_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::empty(self.n);
        for (i, j, c) in self.iter() {
            if c == PairClass::ForcedEdge {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Graph whose non-edges are exactly the forced non-edges.
    pub fn non_forbidden_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::empty(self.n);
        for (i, j, c) in self.iter() {
            if c != PairClass::ForcedNonEdge {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// First violation of the forcible-interval property, if any.
    ///
    /// The property: if `{i, j}` is a forced edge and `d_k >= d_j` for some
    /// `k` outside the pair, then `{i, k}` is a forced edge; if `{i, k}` is a
    /// forced non-edge and `d_k >= d_j`, then `{i, j}` is a forced non-edge.
    /// Returns `(i, j, k)`.
    pub fn interval_violation(&self, d: &DegreeSequence) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    if i == j || i == k || j == k || d.degree(k) < d.degree(j) {
                        continue;
                    }
                    let ij = self.get(i, j);
                    let ik = self.get(i, k);
                    if ij == PairClass::ForcedEdge && ik != PairClass::ForcedEdge {
                        return Some((i, j, k));
                    }
                    if ik == PairClass::ForcedNonEdge && ij != PairClass::ForcedNonEdge {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i >= 1 && i < j && j <= n {
        Ok(())
    } else {
        Err(Error::BadPair { i, j, n })
    }
}

fn perturbed(d: &DegreeSequence, i: usize, j: usize, by: i64) -> Result<Vec<i64>> {
    check_pair(d.len(), i, j)?;
    let mut out = d.to_int_list();
    out[i - 1] += by;
    out[j - 1] += by;
    Ok(out)
}

/// `d` with positions `i` and `j` raised by one, left unsorted.
pub fn perturbed_plus(d: &DegreeSequence, i: usize, j: usize) -> Result<Vec<i64>> {
    perturbed(d, i, j, 1)
}

/// `d` with positions `i` and `j` lowered by one, left unsorted. May hold -1.
pub fn perturbed_minus(d: &DegreeSequence, i: usize, j: usize) -> Result<Vec<i64>> {
    perturbed(d, i, j, -1)
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    if is_graphic(&d.to_int_list()) {
        Ok(())
    } else {
        Err(Error::NotGraphic)
    }
}

/// Classifies `{i, j}` by testing whether adding or removing the pair's
/// degree keeps the sequence graphic.
pub fn classify_pair_via_graphicality(d: &DegreeSequence, i: usize, j: usize) -> Result<PairClass> {
    check_pair(d.len(), i, j)?;
    require_graphic(d)?;
    classify_graphic_unchecked(d, i, j)
}

fn classify_graphic_unchecked(d: &DegreeSequence, i: usize, j: usize) -> Result<PairClass> {
    let edge = !is_graphic(&perturbed_plus(d, i, j)?);
    let non_edge = !is_graphic(&perturbed_minus(d, i, j)?);
    match (edge, non_edge) {
        (true, false) => Ok(PairClass::ForcedEdge),
        (false, true) => Ok(PairClass::ForcedNonEdge),
        (false, false) => Ok(PairClass::Unforced),
        (true, true) => Err(Error::Internal(format!(
            "pair ({i}, {j}) of {d} tests as both forced edge and forced non-edge"
        ))),
    }
}

/// Prefix counts over the profile that answer each difference condition in
/// constant time.
struct DeltaIndex<'a> {
    d: &'a DegreeSequence,
    // zeros[k] = #{t < k : delta[t] == 0}, small[k] = #{t < k : delta[t] <= 1}
    zeros: Vec<usize>,
    small: Vec<usize>,
}

impl<'a> DeltaIndex<'a> {
    fn new(d: &'a DegreeSequence, profile: &EgProfile) -> Self {
        let mut zeros = vec![0; profile.delta.len() + 1];
        let mut small = vec![0; profile.delta.len() + 1];
        for (k, &v) in profile.delta.iter().enumerate() {
            zeros[k + 1] = zeros[k] + usize::from(v == 0);
            small[k + 1] = small[k] + usize::from(v <= 1);
        }
        DeltaIndex { d, zeros, small }
    }

    // Any index in lo..=hi (clamped to 0..=n) present in `counts`.
    fn any(counts: &[usize], lo: usize, hi: usize) -> bool {
        let hi = hi.min(counts.len() - 2);
        lo <= hi && counts[hi + 1] > counts[lo]
    }

    fn classify(&self, i: usize, j: usize) -> Result<PairClass> {
        let n = self.d.len();
        let (di, dj) = (self.d.degree(i), self.d.degree(j));
        // (1) delta_k <= 1 with j <= k.
        // (2) delta_k == 0 with i <= k < j and k <= d_j.
        let edge = Self::any(&self.small, j, n) || Self::any(&self.zeros, i, (j - 1).min(dj));
        // (3) delta_k <= 1 with d_i <= k < i. At k = d_i the lowered term
        // d_i - 1 already falls below k, so the right side drops by 2.
        // (4) delta_k == 0 with k < i and d_j <= k <= d_i.
        let non_edge =
            Self::any(&self.small, di, i - 1) || Self::any(&self.zeros, dj, (i - 1).min(di));
        match (edge, non_edge) {
            (true, false) => Ok(PairClass::ForcedEdge),
            (false, true) => Ok(PairClass::ForcedNonEdge),
            (false, false) => Ok(PairClass::Unforced),
            (true, true) => Err(Error::Internal(format!(
                "pair ({i}, {j}) of {} meets both edge and non-edge conditions",
                self.d
            ))),
        }
    }
}

/// Classifies `{i, j}` from the Erdős–Gallai differences of `d` alone.
///
/// The witness index `k` ranges over `0..=n`; `k = 0` is what marks every
/// pair at a degree-0 vertex as a forced non-edge.
pub fn classify_pair_via_deltas(d: &DegreeSequence, i: usize, j: usize) -> Result<PairClass> {
    check_pair(d.len(), i, j)?;
    let profile = eg_profile(d);
    if !is_graphic(&d.to_int_list()) {
        return Err(Error::NotGraphic);
    }
    DeltaIndex::new(d, &profile).classify(i, j)
}

/// Classifies every pair of a graphic sequence.
pub fn classification_matrix(d: &DegreeSequence, method: Method) -> Result<ClassificationMatrix> {
    require_graphic(d)?;
    match method {
        Method::Deltas => {
            let profile = eg_profile(d);
            let index = DeltaIndex::new(d, &profile);
            ClassificationMatrix::try_from_fn(d.len(), |i, j| index.classify(i, j))
        }
        Method::Graphicality => {
            ClassificationMatrix::try_from_fn(d.len(), |i, j| classify_graphic_unchecked(d, i, j))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use PairClass::*;

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v).unwrap()
    }

    #[test]
    fn perturbations() {
        let d = seq(&[2, 2, 1, 1, 0]);
        assert_eq!(perturbed_plus(&d, 1, 2).unwrap(), vec![3, 3, 1, 1, 0]);
        assert_eq!(perturbed_plus(&d, 3, 4).unwrap(), vec![2, 2, 2, 2, 0]);
        assert_eq!(perturbed_minus(&d, 2, 5).unwrap(), vec![2, 1, 1, 1, -1]);
        assert_eq!(perturbed_minus(&d, 3, 4).unwrap(), vec![2, 2, 0, 0, 0]);
        assert_eq!(perturbed_minus(&seq(&[1, 1]), 1, 2).unwrap(), vec![0, 0]);
    }

    #[test]
    fn bad_pairs() {
        let single = seq(&[0]);
        assert!(matches!(
            perturbed_plus(&single, 1, 1),
            Err(Error::BadPair { .. })
        ));
        let d = seq(&[2, 2, 1, 1, 0]);
        assert!(matches!(
            perturbed_plus(&d, 2, 1),
            Err(Error::BadPair { .. })
        ));
        assert!(matches!(
            perturbed_minus(&d, 0, 1),
            Err(Error::BadPair { .. })
        ));
        assert!(matches!(
            classify_pair_via_deltas(&d, 4, 6),
            Err(Error::BadPair { .. })
        ));
    }

    #[test]
    fn not_graphic_is_rejected() {
        let d = seq(&[3, 3, 1, 1]);
        assert_eq!(classify_pair_via_deltas(&d, 1, 2), Err(Error::NotGraphic));
        assert_eq!(
            classify_pair_via_graphicality(&d, 1, 2),
            Err(Error::NotGraphic)
        );
        assert_eq!(
            classification_matrix(&d, Method::Deltas),
            Err(Error::NotGraphic)
        );
    }

    #[test]
    fn pair_examples_both_methods() {
        let d = seq(&[2, 2, 1, 1, 0]);
        for f in [classify_pair_via_graphicality, classify_pair_via_deltas] {
            assert_eq!(f(&d, 1, 2).unwrap(), ForcedEdge);
            assert_eq!(f(&d, 3, 4).unwrap(), ForcedNonEdge);
            assert_eq!(f(&d, 1, 3).unwrap(), Unforced);
            assert_eq!(f(&d, 2, 5).unwrap(), ForcedNonEdge);
            let q = seq(&[1, 1, 1, 1]);
            assert_eq!(f(&q, 1, 2).unwrap(), Unforced);
            assert_eq!(f(&q, 2, 3).unwrap(), Unforced);
        }
    }

    #[test]
    fn non_edge_when_difference_one_sits_at_the_lower_degree() {
        // delta_1 = 1 and d_5 = d_6 = 1: joining 5 and 6 would leave the
        // degree-4 vertex three possible neighbours.
        let d = seq(&[4, 2, 2, 2, 1, 1]);
        assert_eq!(eg_profile(&d).delta[1], 1);
        for f in [classify_pair_via_graphicality, classify_pair_via_deltas] {
            assert_eq!(f(&d, 5, 6).unwrap(), PairClass::ForcedNonEdge);
            assert_eq!(f(&d, 4, 5).unwrap(), PairClass::Unforced);
        }
    }

    #[test]
    fn matrix_examples() {
        let d = seq(&[2, 2, 1, 1, 0]);
        let m = classification_matrix(&d, Method::Deltas).unwrap();
        assert_eq!(m.len(), 10);
        assert_eq!(m.get(1, 2), ForcedEdge);
        assert_eq!(m.get(2, 1), ForcedEdge);
        for (i, j) in [(3, 4), (1, 5), (2, 5), (3, 5), (4, 5)] {
            assert_eq!(m.get(i, j), ForcedNonEdge, "({i},{j})");
        }
        for (i, j) in [(1, 3), (1, 4), (2, 3), (2, 4)] {
            assert_eq!(m.get(i, j), Unforced, "({i},{j})");
        }
        assert_eq!(m, classification_matrix(&d, Method::Graphicality).unwrap());

        let t = classification_matrix(&seq(&[3, 1, 1, 1, 0]), Method::Deltas).unwrap();
        assert!(t.all_forced());
        let u = classification_matrix(&seq(&[1, 1, 1, 1]), Method::Deltas).unwrap();
        assert_eq!(u.count(Unforced), 6);
    }

    #[test]
    fn degenerate_sizes() {
        assert!(
            classification_matrix(&DegreeSequence::empty(), Method::Deltas)
                .unwrap()
                .is_empty()
        );
        assert!(classification_matrix(&seq(&[0]), Method::Graphicality)
            .unwrap()
            .is_empty());
        let two = classification_matrix(&seq(&[1, 1]), Method::Deltas).unwrap();
        assert_eq!(two.get(1, 2), ForcedEdge);
    }

    #[test]
    fn envelope_graphs_from_matrix() {
        let m = classification_matrix(&seq(&[2, 2, 1, 1, 0]), Method::Deltas).unwrap();
        assert_eq!(
            m.forced_edge_graph().edges().collect::<Vec<_>>(),
            vec![(1, 2)]
        );
        assert_eq!(
            m.non_forbidden_graph().edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (1, 4), (2, 3), (2, 4)]
        );
        assert_eq!(m.interval_violation(&seq(&[2, 2, 1, 1, 0])), None);
    }

    #[test]
    fn interval_violation_detects_bad_matrix() {
        let d = seq(&[2, 2, 1, 1, 0]);
        // {1,3} forced edge but {1,2} (d_2 >= d_3) not.
        let bad = ClassificationMatrix::from_fn(5, |i, j| {
            if (i, j) == (1, 3) {
                ForcedEdge
            } else {
                Unforced
            }
        });
        assert!(bad.interval_violation(&d).is_some());
    }
}
