//! Validated degree sequences.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Upper bound on sequence length. Keeps every Erdős–Gallai sum inside `i64`.
pub const MAX_LEN: usize = 1 << 20;

/// A nonincreasing list of degrees on vertices labeled `1..=n`.
///
/// Vertex `i` is bound to position `i`, so the order of terms is part of the
/// value: unsorted input is rejected rather than sorted behind the caller's
/// back. Use [`DegreeSequence::normalized`] to opt into sorting.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DegreeSequence {
    terms: Vec<usize>,
}

impl DegreeSequence {
    /// Validates `raw`: nonincreasing, every term in `0..=n-1`.
    pub fn new(raw: &[i64]) -> Result<Self> {
        validate_sequence(raw)
    }

    /// Sorts `raw` descending first, then validates.
    pub fn normalized(raw: &[i64]) -> Result<Self> {
        let mut sorted = raw.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        validate_sequence(&sorted)
    }

    /// The empty sequence (the graph with no vertices).
    pub fn empty() -> Self {
        DegreeSequence { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[usize] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree of the vertex with 1-based `label`.
    ///
    /// Panics if the label is out of range.
    pub fn degree(&self, label: usize) -> usize {
        self.terms[label - 1]
    }

    pub fn sum(&self) -> usize {
        self.terms.iter().sum()
    }

    /// Terms as signed integers, the form accepted by graphicality testing.
    pub fn to_int_list(&self) -> Vec<i64> {
        self.terms.iter().map(|&t| t as i64).collect()
    }

    pub(crate) fn from_terms_unchecked(terms: Vec<usize>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence { terms }
    }
}

/// Checks that `raw` is a legal labeled degree sequence.
pub fn validate_sequence(raw: &[i64]) -> Result<DegreeSequence> {
    let n = raw.len();
    if n > MAX_LEN {
        return Err(Error::TooLong(n));
    }
    let max = n as i64 - 1;
    for (idx, &value) in raw.iter().enumerate() {
        if value < 0 || value > max {
            return Err(Error::TermOutOfRange {
                position: idx + 1,
                value,
                max,
            });
        }
    }
    if let Some(idx) = raw.windows(2).position(|w| w[0] < w[1]) {
        return Err(Error::NotSorted {
            position: idx + 2,
            prev: raw[idx],
            next: raw[idx + 1],
        });
    }
    Ok(DegreeSequence {
        terms: raw.iter().map(|&t| t as usize).collect(),
    })
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        validate_sequence(&raw)
    }
}

impl From<DegreeSequence> for Vec<i64> {
    fn from(d: DegreeSequence) -> Self {
        d.to_int_list()
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{t}")?;
        }
        write!(f, ")")
    }
}

/// Every nonincreasing list of `len` terms drawn from `0..=max_term`, in
/// lexicographically decreasing order.
pub fn nonincreasing_lists(len: usize, max_term: usize) -> NonincreasingLists {
    NonincreasingLists {
        current: Some(vec![max_term; len]),
    }
}

/// Iterator returned by [`nonincreasing_lists`].
#[derive(Debug, Clone)]
pub struct NonincreasingLists {
    current: Option<Vec<usize>>,
}

impl Iterator for NonincreasingLists {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        // Decrement the last nonzero term and reset everything after it to
        // the new value.
        if let Some(pos) = out.iter().rposition(|&t| t > 0) {
            let mut succ = out.clone();
            let v = succ[pos] - 1;
            for t in &mut succ[pos..] {
                *t = v;
            }
            self.current = Some(succ);
        }
        Some(out)
    }
}

/// All valid degree sequences (not necessarily graphic) on exactly `n` vertices.
pub fn all_sequences(n: usize) -> impl Iterator<Item = DegreeSequence> {
    nonincreasing_lists(n, n.saturating_sub(1)).map(DegreeSequence::from_terms_unchecked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_nonincreasing_input() {
        let d = validate_sequence(&[2, 2, 1, 1, 0]).unwrap();
        assert_eq!(d.len(), 5);
        assert_eq!(d.degree(1), 2);
        assert_eq!(d.degree(5), 0);
    }

    #[test]
    fn empty_is_valid() {
        let d = validate_sequence(&[]).unwrap();
        assert_eq!(d.len(), 0);
        assert_eq!(d, DegreeSequence::empty());
    }

    #[test]
    fn rejects_unsorted() {
        assert!(matches!(
            validate_sequence(&[1, 2, 1]),
            Err(Error::NotSorted { position: 2, .. })
        ));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            validate_sequence(&[3, 1, 1]),
            Err(Error::TermOutOfRange { value: 3, .. })
        ));
        assert!(matches!(
            validate_sequence(&[1, -1]),
            Err(Error::TermOutOfRange { value: -1, .. })
        ));
    }

    #[test]
    fn normalized_sorts() {
        let d = DegreeSequence::normalized(&[1, 2, 1]).unwrap();
        assert_eq!(d.terms(), &[2, 1, 1]);
    }

    #[test]
    fn validation_is_idempotent() {
        for n in 0..6 {
            for d in all_sequences(n) {
                assert_eq!(validate_sequence(&d.to_int_list()).unwrap(), d);
            }
        }
    }

    #[test]
    fn list_enumeration_counts() {
        // C(len + max, len) multisets.
        assert_eq!(nonincreasing_lists(3, 2).count(), 10);
        assert_eq!(nonincreasing_lists(0, 5).count(), 1);
        assert_eq!(all_sequences(8).count(), 6435);
        let lists: Vec<_> = nonincreasing_lists(2, 1).collect();
        assert_eq!(lists, vec![vec![1, 1], vec![1, 0], vec![0, 0]]);
    }

    #[test]
    fn display_format() {
        let d = validate_sequence(&[2, 1, 1]).unwrap();
        assert_eq!(d.to_string(), "(2,1,1)");
        assert_eq!(DegreeSequence::empty().to_string(), "()");
    }
}
