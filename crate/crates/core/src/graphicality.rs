//! Erdős–Gallai differences, the strong index, and graphicality.

use serde::{Deserialize, Serialize};

use crate::sequence::DegreeSequence;

/// Per-index Erdős–Gallai data for a degree sequence, indexed `0..=n`.
///
/// `delta[k] = rhs[k] - lhs[k]`, where `lhs[k]` is the sum of the `k` largest
/// terms and `rhs[k] = k(k-1) + Σ_{ℓ>k} min(k, d_ℓ)`. Index 0 holds the
/// empty-sum values, so `delta[0] == 0` always.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EgProfile {
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub delta: Vec<i64>,
    /// Strong index `max{i : d_i >= i - 1}`, 0 for the empty sequence.
    pub m: usize,
    /// Every `k` in `0..=m` with `delta[k] == 0`, ascending. Always starts with 0.
    pub eg_zeros: Vec<usize>,
}

impl EgProfile {
    pub fn n(&self) -> usize {
        self.delta.len() - 1
    }

    /// Largest `k` in `0..=n` with `delta[k] <= 1`.
    pub fn q(&self) -> usize {
        self.delta
            .iter()
            .rposition(|&v| v <= 1)
            .expect("delta[0] is always 0")
    }

    /// Whether `delta[k] >= 0` for all `k` in `1..=m`.
    pub fn inequalities_hold(&self) -> bool {
        self.delta[1..=self.m].iter().all(|&v| v >= 0)
    }
}

/// Erdős–Gallai profile of a validated sequence.
pub fn eg_profile(d: &DegreeSequence) -> EgProfile {
    profile_of_sorted(d.terms())
}

/// Profile of any nonincreasing list of nonnegative integers. Terms may
/// exceed `n - 1`; the differences are still well defined.
pub(crate) fn profile_of_sorted(terms: &[usize]) -> EgProfile {
    let n = terms.len();
    debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));

    // suffix[i] = Σ terms[i..]
    let mut suffix = vec![0i64; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + terms[i] as i64;
    }

    let mut lhs = Vec::with_capacity(n + 1);
    let mut rhs = Vec::with_capacity(n + 1);
    let mut delta = Vec::with_capacity(n + 1);
    // at_least = number of terms >= k; nonincreasing in k, so a single
    // pointer suffices.
    let mut at_least = n;
    for k in 0..=n {
        while at_least > 0 && terms[at_least - 1] < k {
            at_least -= 1;
        }
        let left = suffix[0] - suffix[k];
        let big_after_k = at_least.saturating_sub(k) as i64;
        let tail_start = at_least.max(k);
        let ki = k as i64;
        let right = ki * (ki - 1) + ki * big_after_k + suffix[tail_start];
        lhs.push(left);
        rhs.push(right);
        delta.push(right - left);
    }

    let m = terms
        .iter()
        .enumerate()
        .take_while(|&(idx, &t)| t >= idx)
        .count();
    let eg_zeros = (0..=m).filter(|&k| delta[k] == 0).collect();

    EgProfile {
        lhs,
        rhs,
        delta,
        m,
        eg_zeros,
    }
}

/// Decides whether an arbitrary integer list is the degree list of some
/// simple graph. Order does not matter; any negative term means no.
pub fn is_graphic(raw: &[i64]) -> bool {
    if raw.iter().any(|&t| t < 0) {
        return false;
    }
    let total: i64 = raw.iter().sum();
    if total % 2 != 0 {
        return false;
    }
    let mut terms: Vec<usize> = raw.iter().map(|&t| t as usize).collect();
    terms.sort_unstable_by(|a, b| b.cmp(a));
    profile_of_sorted(&terms).inequalities_hold()
}

/// Degree sequence of the complement graph. Label `i` here corresponds to
/// label `n + 1 - i` in the result.
pub fn complement_sequence(d: &DegreeSequence) -> DegreeSequence {
    let n = d.len();
    let terms = d.terms().iter().rev().map(|&t| n - 1 - t).collect();
    DegreeSequence::from_terms_unchecked(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequence::all_sequences;

    fn seq(v: &[i64]) -> DegreeSequence {
        DegreeSequence::new(v).unwrap()
    }

    /// Direct evaluation of the defining sums.
    fn naive_delta(terms: &[usize]) -> Vec<i64> {
        let n = terms.len();
        (0..=n)
            .map(|k| {
                let lhs: i64 = terms[..k].iter().map(|&t| t as i64).sum();
                let ki = k as i64;
                let rhs =
                    ki * (ki - 1) + terms[k..].iter().map(|&t| (t as i64).min(ki)).sum::<i64>();
                rhs - lhs
            })
            .collect()
    }

    #[test]
    fn two_realization_example() {
        let p = eg_profile(&seq(&[2, 2, 1, 1, 0]));
        assert_eq!(p.delta, vec![0, 1, 0, 2, 6, 14]);
        assert_eq!(p.m, 2);
        assert_eq!(p.eg_zeros, vec![0, 2]);
    }

    #[test]
    fn threshold_example() {
        let p = eg_profile(&seq(&[3, 1, 1, 1, 0]));
        assert_eq!(p.delta, vec![0, 0, 0, 2, 6, 14]);
        assert_eq!(p.m, 2);
        assert_eq!(p.eg_zeros, vec![0, 1, 2]);
    }

    #[test]
    fn empty_profile() {
        let p = eg_profile(&DegreeSequence::empty());
        assert_eq!(p.delta, vec![0]);
        assert_eq!(p.m, 0);
        assert_eq!(p.eg_zeros, vec![0]);
        assert!(is_graphic(&[]));
    }

    #[test]
    fn graphicality_examples() {
        assert!(is_graphic(&[2, 2, 1, 1, 0]));
        assert!(!is_graphic(&[2, 1, 1, 1, -1]));
        assert!(!is_graphic(&[3, 3, 1, 1]));
        assert_eq!(eg_profile(&seq(&[3, 3, 1, 1])).delta[2], -2);
        assert!(!is_graphic(&[1, 1, 1]));
        assert!(is_graphic(&[1, 2, 1]));
        // A term equal to n can show up after a perturbation.
        assert!(!is_graphic(&[3, 2, 1]));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement_sequence(&seq(&[2, 2, 1, 1, 0])),
            seq(&[4, 3, 3, 2, 2])
        );
        assert_eq!(complement_sequence(&seq(&[0])), seq(&[0]));
        assert_eq!(
            complement_sequence(&seq(&[3, 1, 1, 1, 0])),
            seq(&[4, 3, 3, 3, 1])
        );
    }

    #[test]
    fn fast_profile_matches_definition() {
        for n in 0..=8 {
            for d in all_sequences(n) {
                let p = eg_profile(&d);
                assert_eq!(p.delta, naive_delta(d.terms()), "{d}");
                for k in 0..=n {
                    assert_eq!(p.delta[k], p.rhs[k] - p.lhs[k]);
                }
                assert_eq!(p.delta[0], 0);
            }
        }
    }

    #[test]
    fn graphic_sequences_have_nonnegative_deltas_everywhere() {
        for n in 0..=8 {
            for d in all_sequences(n) {
                let p = eg_profile(&d);
                if is_graphic(&d.to_int_list()) {
                    assert!(p.delta[1..].iter().all(|&v| v >= 0), "{d}");
                    assert!(p.delta[p.m + 1..].iter().all(|&v| v >= 2), "{d}");
                }
            }
        }
    }

    #[test]
    fn complement_is_involution_and_preserves_graphicality() {
        for n in 0..=8 {
            for d in all_sequences(n) {
                let c = complement_sequence(&d);
                assert_eq!(complement_sequence(&c), d);
                assert_eq!(is_graphic(&d.to_int_list()), is_graphic(&c.to_int_list()));
            }
        }
    }
}
