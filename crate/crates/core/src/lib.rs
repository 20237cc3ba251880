//! Degree-sequence analysis: Erdős–Gallai differences, pairs forced into or
//! out of every realization, threshold envelopes, canonical decomposition,
//! and the dominance order.
//!
//! Vertices are labeled `1..=n` in the order of the nonincreasing sequence.

pub mod dominance;
pub mod envelope;
pub mod error;
pub mod forced;
pub mod graph;
pub mod graphicality;
pub mod notation;
pub mod realization;
pub mod sequence;

pub use dominance::{
    compare, decomposable_within, elementary_covers, lift_to_decomposable, majorizes,
    unit_transformations, Comparison, Cover, LiftResult, Partition, UnitMove,
};
pub use envelope::{
    canonical_skeleton, eg_zero_list, intersection_envelope, is_decomposable_sequence,
    is_split_sequence, is_threshold_sequence, union_envelope, CanonicalSkeleton, Component,
    Envelope, NonSplitTail, Tail,
};
pub use error::{Error, Result};
pub use forced::{
    classification_matrix, classify_pair_via_deltas, classify_pair_via_graphicality,
    perturbed_minus, perturbed_plus, ClassificationMatrix, Method, PairClass,
};
pub use graph::{build_threshold_graph, CreationSequence, LabeledGraph, Step};
pub use graphicality::{complement_sequence, eg_profile, is_graphic, EgProfile};
pub use realization::{
    count_realizations, delta_by_partition_counts, enumerate_realizations,
    find_alternating_four_cycle, forced_pairs_oracle, realize, switch_alternating, OracleReport,
    RealizationSet,
};
pub use sequence::{
    all_sequences, nonincreasing_lists, validate_sequence, DegreeSequence, MAX_LEN,
};
