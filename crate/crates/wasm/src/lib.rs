//! Browser bindings. Each export takes the sequence as text (`2,2,1,1,0` or
//! `15^5,6^7,3^7`) and returns a JSON string; errors come back as a thrown
//! string. The `*_json` functions hold the logic and run natively too.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use degseq::{
    classification_matrix, dominance, eg_profile, intersection_envelope, is_decomposable_sequence,
    is_graphic, is_split_sequence, is_threshold_sequence, lift_to_decomposable, notation,
    union_envelope, DegreeSequence, Envelope, Method, PairClass, Partition,
};

fn parse(text: &str, normalize: bool) -> Result<DegreeSequence, String> {
    let raw = notation::parse_list(text).map_err(|e| e.to_string())?;
    if normalize {
        DegreeSequence::normalized(&raw)
    } else {
        DegreeSequence::new(&raw)
    }
    .map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    sequence: Vec<usize>,
    graphic: bool,
    m: usize,
    delta: Vec<i64>,
    eg_zeros: Vec<usize>,
    split: Option<bool>,
    threshold: Option<bool>,
    decomposable: Option<bool>,
    /// Row-major `n x n` grid of `E`, `N`, `.`, with `-` on the diagonal.
    grid: Vec<String>,
    forced_edges: usize,
    forced_non_edges: usize,
}

/// Profile and pair classification.
pub fn analyze_json(text: &str, normalize: bool) -> Result<String, String> {
    let d = parse(text, normalize)?;
    let p = eg_profile(&d);
    let graphic = is_graphic(&d.to_int_list());
    let n = d.len();
    let (mut grid, mut forced_edges, mut forced_non_edges) = (Vec::new(), 0, 0);
    if graphic {
        let m = classification_matrix(&d, Method::Deltas).map_err(|e| e.to_string())?;
        grid = (1..=n)
            .map(|i| {
                (1..=n)
                    .map(|j| if i == j { '-' } else { m.get(i, j).symbol() })
                    .collect()
            })
            .collect();
        forced_edges = m.count(PairClass::ForcedEdge);
        forced_non_edges = m.count(PairClass::ForcedNonEdge);
    }
    let flag =
        |f: fn(&DegreeSequence) -> degseq::Result<bool>| graphic.then(|| f(&d).unwrap_or(false));
    to_json(&Analysis {
        n,
        sequence: d.terms().to_vec(),
        graphic,
        m: p.m,
        delta: p.delta,
        eg_zeros: p.eg_zeros,
        split: flag(is_split_sequence),
        threshold: flag(is_threshold_sequence),
        decomposable: flag(is_decomposable_sequence),
        grid,
        forced_edges,
        forced_non_edges,
    })
}

#[derive(Serialize)]
struct EnvelopeView {
    edges: Vec<[usize; 2]>,
    creation: String,
    build_order: Vec<usize>,
    dot: String,
}

#[derive(Serialize)]
struct Envelopes {
    n: usize,
    intersection: EnvelopeView,
    union: EnvelopeView,
}

fn view(env: &Envelope) -> EnvelopeView {
    EnvelopeView {
        edges: env.graph.edges().map(|(a, b)| [a, b]).collect(),
        creation: env.creation.to_string(),
        build_order: env.build_order.clone(),
        dot: env.graph.to_dot(),
    }
}

/// Both envelope graphs with their creation sequences.
pub fn envelopes_json(text: &str, normalize: bool) -> Result<String, String> {
    let d = parse(text, normalize)?;
    let i = intersection_envelope(&d).map_err(|e| e.to_string())?;
    let u = union_envelope(&d).map_err(|e| e.to_string())?;
    to_json(&Envelopes {
        n: d.len(),
        intersection: view(&i),
        union: view(&u),
    })
}

#[derive(Serialize)]
struct LiftStep {
    p: usize,
    q: usize,
    /// Sequence after this step.
    result: Vec<usize>,
}

#[derive(Serialize)]
struct LiftView {
    source: Vec<usize>,
    target: Vec<usize>,
    target_text: String,
    steps: Vec<LiftStep>,
    fallback: bool,
}

/// Lift to a split or decomposable sequence, with each intermediate
/// sequence for drawing Ferrers diagrams.
pub fn lift_json(text: &str, normalize: bool) -> Result<String, String> {
    let e = parse(text, normalize)?;
    let r = lift_to_decomposable(&e).map_err(|e| e.to_string())?;
    let mut cur = Partition::from(&e);
    let mut steps = Vec::new();
    for &mv in &r.steps {
        cur = dominance::apply_move(cur.terms(), mv).ok_or("invalid lift step")?;
        steps.push(LiftStep {
            p: mv.p,
            q: mv.q,
            result: cur.terms().to_vec(),
        });
    }
    to_json(&LiftView {
        source: e.terms().to_vec(),
        target: r.target.terms().to_vec(),
        target_text: notation::format_compact(r.target.terms()),
        steps,
        fallback: r.fallback,
    })
}

fn js(result: Result<String, String>) -> Result<String, JsValue> {
    result.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn analyze(text: &str, normalize: bool) -> Result<String, JsValue> {
    js(analyze_json(text, normalize))
}

#[wasm_bindgen]
pub fn envelopes(text: &str, normalize: bool) -> Result<String, JsValue> {
    js(envelopes_json(text, normalize))
}

#[wasm_bindgen]
pub fn lift(text: &str, normalize: bool) -> Result<String, JsValue> {
    js(lift_json(text, normalize))
}
