//! Sequence-level canonical structure and the envelope graphs.
//!
//! The intersection envelope `I(d)` has the forced edges of `d` as its edge
//! set; the union envelope `U(d)` has the forced non-edges as its non-edges.
//! Both are threshold graphs. Besides building them from the pair
//! classification, this module derives their isolated/dominating creation
//! sequences from the Erdős–Gallai zero list, which gives an independent
//! route to the same graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forced::{classification_matrix, Method};
use crate::graph::{CreationSequence, LabeledGraph, Step};
use crate::graphicality::{eg_profile, is_graphic, EgProfile};
use crate::sequence::DegreeSequence;

/// A split canonical component: `clique` is `B_j`, `independent` is `A_j`.
///
/// Single-vertex components have exactly one nonempty side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub clique: BTreeSet<usize>,
    pub independent: BTreeSet<usize>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.clique.len() + self.independent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn vertices(&self) -> BTreeSet<usize> {
        self.clique.union(&self.independent).copied().collect()
    }
}

/// The sets describing a non-split innermost component `G_0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NonSplitTail {
    /// `{i : p < i <= q}`
    pub b_prime: BTreeSet<usize>,
    /// `V(G_0) - B'_0`
    pub a_prime: BTreeSet<usize>,
    /// `{i : i > q, p < d_i <= q}`
    pub a_double_prime: BTreeSet<usize>,
    /// `V(G_0) - A''_0`
    pub b_double_prime: BTreeSet<usize>,
}

/// Innermost component descriptor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tail {
    /// Vertices not covered by any listed component. Empty exactly when the
    /// sequence is split; the last listed component is then `G_0`.
    pub vertices: BTreeSet<usize>,
    pub split: bool,
    /// Last term of the Erdős–Gallai zero list.
    pub p: usize,
    /// Largest `k` with `delta[k] <= 1`.
    pub q: usize,
    pub non_split: Option<NonSplitTail>,
}

/// Canonical decomposition read off a degree sequence, outermost first.
///
/// Components are the split blocks `B = {t < ℓ <= t'}`, `A = {t < d_ℓ < t'}`
/// for consecutive zeros `t, t'`, interleaved with the single-vertex
/// components of degree `t` that sit between consecutive blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CanonicalSkeleton {
    pub components: Vec<Component>,
    pub tail: Tail,
}

impl CanonicalSkeleton {
    /// Canonical components including a nonempty tail.
    pub fn component_count(&self) -> usize {
        self.components.len() + usize::from(!self.tail.vertices.is_empty())
    }
}

/// An envelope graph, labeled by the original vertices, together with a
/// creation sequence and the vertex labels in build order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Envelope {
    pub graph: LabeledGraph,
    pub creation: CreationSequence,
    pub build_order: Vec<usize>,
}

impl Envelope {
    /// Graph obtained by running `creation` on the labels of `build_order`.
    pub fn composed_graph(&self) -> LabeledGraph {
        let mut g = LabeledGraph::empty(self.graph.n());
        for (pos, (&v, &step)) in self
            .build_order
            .iter()
            .zip(self.creation.steps())
            .enumerate()
        {
            if step == Step::Dominating {
                for &u in &self.build_order[..pos] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

fn graphic_profile(d: &DegreeSequence) -> Result<EgProfile> {
    if !is_graphic(&d.to_int_list()) {
        return Err(Error::NotGraphic);
    }
    Ok(eg_profile(d))
}

/// Split test: `delta[m] == 0`.
pub fn is_split_sequence(d: &DegreeSequence) -> Result<bool> {
    let p = graphic_profile(d)?;
    Ok(p.delta[p.m] == 0)
}

/// Threshold test: `delta[k] == 0` for every `k` in `1..=m`.
pub fn is_threshold_sequence(d: &DegreeSequence) -> Result<bool> {
    let p = graphic_profile(d)?;
    Ok(p.delta[1..=p.m].iter().all(|&v| v == 0))
}

/// Ascending `k` with `delta[k] == 0`, always beginning with 0.
pub fn eg_zero_list(d: &DegreeSequence) -> Result<Vec<usize>> {
    Ok(graphic_profile(d)?.eg_zeros)
}

/// Whether some realization (hence every one) has a canonical decomposition
/// with at least two components.
pub fn is_decomposable_sequence(d: &DegreeSequence) -> Result<bool> {
    Ok(canonical_skeleton(d)?.component_count() >= 2)
}

pub fn canonical_skeleton(d: &DegreeSequence) -> Result<CanonicalSkeleton> {
    let profile = graphic_profile(d)?;
    Ok(skeleton_from_profile(d, &profile))
}

fn skeleton_from_profile(d: &DegreeSequence, profile: &EgProfile) -> CanonicalSkeleton {
    let n = d.len();
    let zeros = &profile.eg_zeros;
    let p = *zeros.last().expect("zero list starts with 0");
    let q = profile.q();
    let split = profile.delta[profile.m] == 0;

    // Vertices 1..=p all lie in some clique block.
    let singletons_at = |t: usize| -> Vec<Component> {
        (p + 1..=n)
            .filter(|&l| d.degree(l) == t)
            .map(|l| Component {
                clique: BTreeSet::new(),
                independent: BTreeSet::from([l]),
            })
            .collect()
    };

    let mut components = singletons_at(0);
    for pair in zeros.windows(2) {
        let (t, t2) = (pair[0], pair[1]);
        components.push(Component {
            clique: (t + 1..=t2).collect(),
            independent: (1..=n)
                .filter(|&l| t < d.degree(l) && d.degree(l) < t2)
                .collect(),
        });
        components.extend(singletons_at(t2));
    }

    let covered: BTreeSet<usize> = components.iter().flat_map(Component::vertices).collect();
    let vertices: BTreeSet<usize> = (1..=n).filter(|v| !covered.contains(v)).collect();

    let non_split = (!split).then(|| {
        let b_prime: BTreeSet<usize> = (p + 1..=q).collect();
        let a_double_prime: BTreeSet<usize> = (q + 1..=n)
            .filter(|&i| p < d.degree(i) && d.degree(i) <= q)
            .collect();
        NonSplitTail {
            a_prime: vertices.difference(&b_prime).copied().collect(),
            b_double_prime: vertices.difference(&a_double_prime).copied().collect(),
            b_prime,
            a_double_prime,
        }
    });

    CanonicalSkeleton {
        components,
        tail: Tail {
            vertices,
            split,
            p,
            q,
            non_split,
        },
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Which {
    Intersection,
    Union,
}

/// Build order from the composition formulas, read innermost first.
///
/// For `I(d)` each component contributes its clique as dominating vertices
/// then its independent set as isolated ones; for `U(d)` the other way
/// round. A non-split tail uses `(A'_0, B'_0)` for `I(d)` and
/// `(A''_0, B''_0)` for `U(d)`.
fn build_plan(skeleton: &CanonicalSkeleton, which: Which) -> (CreationSequence, Vec<usize>) {
    let mut creation = CreationSequence::default();
    let mut order = Vec::new();
    let mut emit = |clique: &BTreeSet<usize>, independent: &BTreeSet<usize>| {
        let runs = match which {
            Which::Intersection => [(Step::Dominating, clique), (Step::Isolated, independent)],
            Which::Union => [(Step::Isolated, independent), (Step::Dominating, clique)],
        };
        for (step, set) in runs {
            creation.push_run(step, set.len());
            order.extend(set.iter().copied());
        }
    };
    if let Some(t) = &skeleton.tail.non_split {
        match which {
            Which::Intersection => emit(&t.b_prime, &t.a_prime),
            Which::Union => emit(&t.b_double_prime, &t.a_double_prime),
        }
    }
    for c in skeleton.components.iter().rev() {
        emit(&c.clique, &c.independent);
    }
    (creation, order)
}

fn envelope(d: &DegreeSequence, which: Which) -> Result<Envelope> {
    let profile = graphic_profile(d)?;
    let matrix = classification_matrix(d, Method::Deltas)?;
    let graph = match which {
        Which::Intersection => matrix.forced_edge_graph(),
        Which::Union => matrix.non_forbidden_graph(),
    };
    let skeleton = skeleton_from_profile(d, &profile);
    let (creation, build_order) = build_plan(&skeleton, which);
    if build_order.len() != d.len() {
        return Err(Error::Internal(format!(
            "composition for {d} places {} of {} vertices",
            build_order.len(),
            d.len()
        )));
    }
    Ok(Envelope {
        graph,
        creation,
        build_order,
    })
}

/// `I(d)`: the forced edges, plus the creation sequence of its threshold
/// structure.
pub fn intersection_envelope(d: &DegreeSequence) -> Result<Envelope> {
    envelope(d, Which::Intersection)
}

/// `U(d)`: every pair except the forced non-edges, plus its creation sequence.
pub fn union_envelope(d: &DegreeSequence) -> Result<Envelope> {
    envelope(d, Which::Union)
}
