//! Dominance (majorization) order on fixed-length, fixed-sum partitions.
//!
//! Sequences here keep their length and may contain zeros, so `(2, 0)` and
//! `(1, 1)` are both elements of the poset with sum 2 and length 2. Terms are
//! not bounded by `n - 1`; that bound only matters once a result is read
//! back as a degree sequence.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::envelope::{is_decomposable_sequence, is_split_sequence};
use crate::error::{Error, Result};
use crate::graphicality::{eg_profile, is_graphic};
use crate::sequence::{validate_sequence, DegreeSequence};

/// A nonincreasing list of nonnegative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Partition {
    terms: Vec<usize>,
}

impl Partition {
    pub fn new(raw: &[i64]) -> Result<Self> {
        if let Some(pos) = raw.iter().position(|&t| t < 0) {
            return Err(Error::InvalidPartition(format!(
                "negative term {} at position {}",
                raw[pos],
                pos + 1
            )));
        }
        if let Some(idx) = raw.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "not nonincreasing at position {} ({} < {})",
                idx + 2,
                raw[idx],
                raw[idx + 1]
            )));
        }
        Ok(Partition {
            terms: raw.iter().map(|&t| t as usize).collect(),
        })
    }

    fn from_sorted(terms: Vec<usize>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        Partition { terms }
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

    pub fn sum(&self) -> usize {
        self.terms.iter().sum()
    }

    /// The same list as a degree sequence, if every term is at most `n - 1`.
    pub fn to_degree_sequence(&self) -> Option<DegreeSequence> {
        validate_sequence(&self.to_int_list()).ok()
    }

    pub fn to_int_list(&self) -> Vec<i64> {
        self.terms.iter().map(|&t| t as i64).collect()
    }
}

impl From<&DegreeSequence> for Partition {
    fn from(d: &DegreeSequence) -> Self {
        Partition::from_sorted(d.terms().to_vec())
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(raw: Vec<i64>) -> Result<Self> {
        Partition::new(&raw)
    }
}

impl From<Partition> for Vec<i64> {
    fn from(p: Partition) -> Self {
        p.to_int_list()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "({})", body.join(","))
    }
}

/// `a ⪰ b`: equal length, equal sum, and every prefix sum of `a` at least
/// the matching prefix sum of `b`. Mismatched length or sum gives `false`.
pub fn majorizes(a: &[usize], b: &[usize]) -> bool {
    if a.len() != b.len() || a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return false;
    }
    let (mut sa, mut sb) = (0usize, 0usize);
    a.iter().zip(b).all(|(&x, &y)| {
        sa += x;
        sb += y;
        sa >= sb
    })
}

/// How two sequences compare in the dominance order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Comparison {
    Equal,
    /// First majorizes second.
    Above,
    /// Second majorizes first.
    Below,
    Incomparable,
    /// Different length or sum; not in a common poset.
    Mismatch,
}

pub fn compare(a: &[usize], b: &[usize]) -> Comparison {
    if a.len() != b.len() || a.iter().sum::<usize>() != b.iter().sum::<usize>() {
        return Comparison::Mismatch;
    }
    match (majorizes(a, b), majorizes(b, a)) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::Above,
        (false, true) => Comparison::Below,
        (false, false) => Comparison::Incomparable,
    }
}

/// A unit transformation: position `p` gains one, position `q > p` loses
/// one. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitMove {
    pub p: usize,
    pub q: usize,
}

/// Result of a single move on `b`, or `None` if it leaves the poset (order
/// broken or a negative term).
pub fn apply_move(b: &[usize], mv: UnitMove) -> Option<Partition> {
    let UnitMove { p, q } = mv;
    if p == 0 || p >= q || q > b.len() || b[q - 1] == 0 {
        return None;
    }
    let mut out = b.to_vec();
    out[p - 1] += 1;
    out[q - 1] -= 1;
    out.windows(2)
        .all(|w| w[0] >= w[1])
        .then(|| Partition::from_sorted(out))
}

/// Brylawski's cover test for a legal move: `q = p + 1` or `b_p = b_q`.
pub fn is_elementary(b: &[usize], mv: UnitMove) -> bool {
    apply_move(b, mv).is_some() && (mv.q == mv.p + 1 || b[mv.p - 1] == b[mv.q - 1])
}

fn legal_moves(b: &[usize]) -> impl Iterator<Item = (UnitMove, Partition)> + '_ {
    let n = b.len();
    (1..=n)
        .flat_map(move |p| (p + 1..=n).map(move |q| UnitMove { p, q }))
        .filter_map(move |mv| apply_move(b, mv).map(|r| (mv, r)))
}

/// Distinct results of one unit transformation on `b`, in move order.
pub fn unit_transformations(b: &[usize]) -> Vec<Partition> {
    let mut seen = BTreeSet::new();
    legal_moves(b)
        .filter_map(|(_, r)| seen.insert(r.clone()).then_some(r))
        .collect()
}

/// A sequence covering `b`, with the move producing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cover {
    pub target: Partition,
    pub p: usize,
    pub q: usize,
}

/// Every sequence that covers `b` in the dominance order.
pub fn elementary_covers(b: &[usize]) -> Vec<Cover> {
    legal_moves(b)
        .filter(|(mv, _)| mv.q == mv.p + 1 || b[mv.p - 1] == b[mv.q - 1])
        .map(|(mv, target)| Cover {
            target,
            p: mv.p,
            q: mv.q,
        })
        .collect()
}

/// Graphic and either split or canonically decomposable.
fn is_split_or_decomposable(terms: &[usize]) -> bool {
    match validate_sequence(&terms.iter().map(|&t| t as i64).collect::<Vec<_>>()) {
        Ok(d) => {
            is_graphic(&d.to_int_list())
                && (is_split_sequence(&d).unwrap_or(false)
                    || is_decomposable_sequence(&d).unwrap_or(false))
        }
        Err(_) => false,
    }
}

/// Outcome of lifting a sequence to a split or decomposable one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftResult {
    pub target: DegreeSequence,
    /// Elementary transformations from the source, in order.
    pub steps: Vec<UnitMove>,
    /// Index whose difference was 1 and drove the move; `None` when the
    /// source already had a zero.
    pub pivot: Option<usize>,
    /// Set when the direct construction failed verification and the result
    /// came from searching the upset instead.
    pub fallback: bool,
}

impl LiftResult {
    pub fn step_count(&self) -> usize {
        self.steps.len()
    }
}

fn first_equal(s: &[usize], v: usize) -> Option<usize> {
    s.iter().position(|&t| t == v).map(|i| i + 1)
}

fn last_equal(s: &[usize], v: usize) -> Option<usize> {
    s.iter().rposition(|&t| t == v).map(|i| i + 1)
}

/// Finds a split or decomposable graphic sequence within `max_steps`
/// elementary transformations above `e`, breadth first.
pub fn decomposable_within(
    e: &DegreeSequence,
    max_steps: usize,
) -> Option<(DegreeSequence, Vec<UnitMove>)> {
    let start = Partition::from(e);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([(start, Vec::new())]);
    while let Some((cur, path)) = queue.pop_front() {
        if is_split_or_decomposable(cur.terms()) {
            let d = cur.to_degree_sequence()?;
            return Some((d, path));
        }
        if path.len() == max_steps {
            continue;
        }
        for c in elementary_covers(cur.terms()) {
            if seen.insert(c.target.clone()) {
                let mut next = path.clone();
                next.push(UnitMove { p: c.p, q: c.q });
                queue.push_back((c.target, next));
            }
        }
    }
    None
}

/// Moves `e` up the dominance order to a split or decomposable sequence,
/// using at most three elementary transformations. A sequence that already
/// is one comes back unchanged.
///
/// With `k` the least index where the difference is 1, the overall move
/// raises the first term equal to `e_k` and lowers the last term equal to
/// `e_{k+1}`; it is carried out as one, two or three covers depending on
/// how often those two values repeat.
pub fn lift_to_decomposable(e: &DegreeSequence) -> Result<LiftResult> {
    if !is_graphic(&e.to_int_list()) {
        return Err(Error::NotGraphic);
    }
    if is_split_or_decomposable(e.terms()) {
        return Ok(LiftResult {
            target: e.clone(),
            steps: Vec::new(),
            pivot: None,
            fallback: false,
        });
    }
    let profile = eg_profile(e);
    if !profile.delta[1..].iter().any(|&v| v <= 1) {
        return Err(Error::NoForcedStructure);
    }
    let k = (1..profile.delta.len())
        .find(|&k| profile.delta[k] == 1)
        .expect("a zero past 0 would make e split or decomposable");
    match direct_lift(e, k) {
        Ok(result) => Ok(result),
        Err(reason) => {
            let (target, steps) = decomposable_within(e, 3).ok_or_else(|| {
                Error::Internal(format!(
                    "lift of {e} failed ({reason}) and no decomposable sequence lies within 3 covers"
                ))
            })?;
            Ok(LiftResult {
                target,
                steps,
                pivot: Some(k),
                fallback: true,
            })
        }
    }
}

fn direct_lift(e: &DegreeSequence, k: usize) -> std::result::Result<LiftResult, String> {
    let terms = e.terms();
    if k >= terms.len() {
        return Err(format!("pivot {k} leaves no vertex after the clique"));
    }
    let b = terms[k - 1];
    let c = terms[k];
    let mult = |v: usize| terms.iter().filter(|&&t| t == v).count();
    let (mult_b, mult_c) = (mult(b), mult(c));

    type Pick = fn(&[usize], usize) -> Option<usize>;
    // Each step: (which end of which value class gains, which loses).
    let plan: Vec<((Pick, usize), (Pick, usize))> = if b == c {
        vec![((first_equal, b), (last_equal, c))]
    } else if mult_b > 1 && mult_c > 1 && b > c + 1 {
        vec![
            ((first_equal, b), (last_equal, b)),
            ((first_equal, c), (last_equal, c)),
            ((first_equal, b - 1), (last_equal, c + 1)),
        ]
    } else if mult_b > 1 {
        vec![
            ((first_equal, b), (last_equal, b)),
            ((first_equal, b - 1), (last_equal, c)),
        ]
    } else if mult_c > 1 {
        vec![
            ((first_equal, c), (last_equal, c)),
            ((first_equal, b), (last_equal, c + 1)),
        ]
    } else {
        vec![((first_equal, b), (last_equal, c))]
    };

    let mut cur = terms.to_vec();
    let mut steps = Vec::with_capacity(plan.len());
    for ((up, up_val), (down, down_val)) in plan {
        let p = up(&cur, up_val).ok_or_else(|| format!("no term equal to {up_val}"))?;
        let q = down(&cur, down_val).ok_or_else(|| format!("no term equal to {down_val}"))?;
        let mv = UnitMove { p, q };
        if !is_elementary(&cur, mv) {
            return Err(format!("move {p}->{q} on {cur:?} is not a cover"));
        }
        let next = apply_move(&cur, mv).expect("checked by is_elementary");
        if !is_graphic(&next.to_int_list()) {
            return Err(format!("intermediate {next} is not graphic"));
        }
        cur = next.terms().to_vec();
        steps.push(mv);
    }

    let mut expected = terms.to_vec();
    expected[first_equal(terms, b).unwrap() - 1] += 1;
    expected[last_equal(terms, c).unwrap() - 1] -= 1;
    if cur != expected {
        return Err(format!("steps reached {cur:?}, expected {expected:?}"));
    }
    if !is_split_or_decomposable(&cur) {
        return Err(format!("{cur:?} is neither split nor decomposable"));
    }
    let target = validate_sequence(&cur.iter().map(|&t| t as i64).collect::<Vec<_>>())
        .map_err(|err| err.to_string())?;
    Ok(LiftResult {
        target,
        steps,
        pivot: Some(k),
        fallback: false,
    })
}
