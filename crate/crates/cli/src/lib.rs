//! `degseq` command-line front end. [`run`] does all the work and returns
//! what to print, so tests can drive it without spawning a process.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use degseq::dominance::{compare, Comparison};
use degseq::realization::DEFAULT_CAP;
use degseq::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_GRAPHIC: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "degseq",
    version,
    about = "Forced pairs, envelopes and dominance for degree sequences"
)]
struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Sort the input into nonincreasing order first. Vertex labels follow
    /// the sorted order.
    #[arg(long, global = true)]
    normalize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Graphicality, strong index, Erdős–Gallai differences and flags.
    Analyze {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Classify every vertex pair as forced edge, forced non-edge or unforced.
    Pairs {
        #[arg(allow_hyphen_values = true)]
        seq: String,
        #[arg(long, value_enum, default_value_t = PairMethod::Delta)]
        method: PairMethod,
    },
    /// Intersection (I) or union (U) of all realizations.
    Envelope {
        #[arg(allow_hyphen_values = true)]
        seq: String,
        #[arg(long, value_enum)]
        which: WhichEnvelope,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edges)]
        format: GraphFormat,
    },
    /// Canonical decomposition read off the sequence.
    Decompose {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Compare two sequences in the dominance order.
    Dominance {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Sequences covering this one in the dominance order.
    Covers {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Nearest split or decomposable sequence above this one.
    Lift {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Brute-force enumeration, cross-checked against the fast methods.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        seq: String,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairMethod {
    Delta,
    Graphic,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum WhichEnvelope {
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "U", alias = "u")]
    U,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Edges,
    Creation,
    Dot,
}

/// What a run produced: exit code and the two output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub status: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnvelopeReport {
    pub which: WhichEnvelope,
    pub edges: Vec<[usize; 2]>,
    pub creation: String,
    pub build_order: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepReport {
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub target: Vec<usize>,
    pub steps: Vec<StepReport>,
    pub fallback: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub target: Vec<usize>,
    pub p: usize,
    pub q: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    /// `equal`, `above` (a majorizes b), `below`, `incomparable` or `mismatch`.
    pub relation: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCheck {
    pub count: u64,
    pub pairs_agree: bool,
    pub intersection_agrees: bool,
    pub union_agrees: bool,
}

/// The `--json` document. Each subcommand fills the fields it computes.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub n: usize,
    pub sequence: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graphic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eg_zeros: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pairs: Option<Vec<PairEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub envelope: Option<EnvelopeReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<CanonicalSkeleton>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dominance: Option<DominanceReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<CoverReport>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lift: Option<LiftReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleCheck>,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_INVALID,
            Failure::Core(Error::NotGraphic) => EXIT_NOT_GRAPHIC,
            Failure::Core(Error::TooLarge { .. }) => EXIT_CAP,
            Failure::Core(_) => EXIT_INVALID,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Usage(text) => text.trim_end().to_string(),
            Failure::Core(e) => format!("error: {e}"),
        }
    }
}

/// Parses `args` (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => fail(Failure::Usage(text)),
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> Outcome {
    Outcome {
        code: f.code(),
        stdout: String::new(),
        stderr: format!("{}\n", f.message()),
    }
}

fn read_sequence(text: &str, normalize: bool) -> Result<DegreeSequence> {
    let raw = notation::parse_list(text)?;
    if normalize {
        DegreeSequence::normalized(&raw)
    } else {
        DegreeSequence::new(&raw)
    }
}

fn read_partition(text: &str, normalize: bool) -> Result<Partition> {
    let mut raw = notation::parse_list(text)?;
    if normalize {
        raw.sort_unstable_by(|a, b| b.cmp(a));
    }
    Partition::new(&raw)
}

fn require_graphic(d: &DegreeSequence) -> Result<()> {
    if is_graphic(&d.to_int_list()) {
        Ok(())
    } else {
        Err(Error::NotGraphic)
    }
}

fn base_report(d: &DegreeSequence) -> Report {
    Report {
        n: d.len(),
        sequence: d.to_int_list(),
        ..Report::default()
    }
}

fn pair_entries(m: &ClassificationMatrix) -> Vec<PairEntry> {
    m.iter()
        .map(|(i, j, class)| PairEntry {
            i,
            j,
            status: class.to_string(),
        })
        .collect()
}

fn to_json(report: &Report) -> String {
    let mut s = serde_json::to_string(report).expect("report serializes");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> std::result::Result<String, Failure> {
    let norm = cli.normalize;
    let json = cli.json;
    match &cli.command {
        Command::Analyze { seq } => analyze(&read_sequence(seq, norm)?, json),
        Command::Pairs { seq, method } => pairs(&read_sequence(seq, norm)?, *method, json),
        Command::Envelope { seq, which, format } => {
            envelope_cmd(&read_sequence(seq, norm)?, *which, *format, json)
        }
        Command::Decompose { seq } => decompose(&read_sequence(seq, norm)?, json),
        Command::Dominance { a, b } => {
            dominance_cmd(&read_partition(a, norm)?, &read_partition(b, norm)?, json)
        }
        Command::Covers { seq } => covers(&read_partition(seq, norm)?, json),
        Command::Lift { seq } => lift(&read_sequence(seq, norm)?, json),
        Command::Oracle { seq, cap } => oracle(&read_sequence(seq, norm)?, *cap, json),
    }
    .map_err(Failure::from)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn analyze(d: &DegreeSequence, json: bool) -> Result<String> {
    let p = eg_profile(d);
    let graphic = is_graphic(&d.to_int_list());
    let mut r = base_report(d);
    r.graphic = Some(graphic);
    r.m = Some(p.m);
    r.delta = Some(p.delta.clone());
    r.eg_zeros = Some(p.eg_zeros.clone());
    if graphic {
        r.split = Some(is_split_sequence(d)?);
        r.threshold = Some(is_threshold_sequence(d)?);
        r.decomposable = Some(is_decomposable_sequence(d)?);
    }
    if json {
        return Ok(to_json(&r));
    }
    let mut out = String::new();
    writeln!(out, "sequence      {d}").unwrap();
    writeln!(out, "n             {}", d.len()).unwrap();
    writeln!(out, "graphic       {}", yes_no(graphic)).unwrap();
    writeln!(out, "strong index  {}", p.m).unwrap();
    writeln!(out, "zeros         {}", join(&p.eg_zeros, " ")).unwrap();
    if graphic {
        writeln!(out, "split         {}", yes_no(r.split.unwrap())).unwrap();
        writeln!(out, "threshold     {}", yes_no(r.threshold.unwrap())).unwrap();
        writeln!(out, "decomposable  {}", yes_no(r.decomposable.unwrap())).unwrap();
    }
    writeln!(out, "\n{:>4} {:>8} {:>8} {:>8}", "k", "lhs", "rhs", "delta").unwrap();
    for k in 0..=d.len() {
        writeln!(
            out,
            "{k:>4} {:>8} {:>8} {:>8}",
            p.lhs[k], p.rhs[k], p.delta[k]
        )
        .unwrap();
    }
    Ok(out)
}

fn matrix_grid(m: &ClassificationMatrix) -> String {
    let n = m.n();
    let width = n.to_string().len();
    let mut out = String::new();
    write!(out, "{:width$}", "").unwrap();
    for j in 1..=n {
        write!(out, " {j:>width$}").unwrap();
    }
    out.push('\n');
    for i in 1..=n {
        write!(out, "{i:>width$}").unwrap();
        for j in 1..=n {
            let c = if i == j { '-' } else { m.get(i, j).symbol() };
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
    }
    out.push_str("E forced edge, N forced non-edge, . unforced\n");
    out
}

fn pairs(d: &DegreeSequence, method: PairMethod, json: bool) -> Result<String> {
    require_graphic(d)?;
    let m = match method {
        PairMethod::Delta => classification_matrix(d, Method::Deltas)?,
        PairMethod::Graphic => classification_matrix(d, Method::Graphicality)?,
        PairMethod::Oracle => forced_pairs_oracle(d, DEFAULT_CAP)?.matrix,
    };
    if json {
        let mut r = base_report(d);
        r.graphic = Some(true);
        r.pairs = Some(pair_entries(&m));
        return Ok(to_json(&r));
    }
    let mut out = matrix_grid(&m);
    for class in [
        PairClass::ForcedEdge,
        PairClass::ForcedNonEdge,
        PairClass::Unforced,
    ] {
        let list: Vec<String> = m
            .iter()
            .filter(|&(_, _, c)| c == class)
            .map(|(i, j, _)| format!("{{{i},{j}}}"))
            .collect();
        writeln!(
            out,
            "{class}: {}",
            if list.is_empty() {
                "none".into()
            } else {
                list.join(" ")
            }
        )
        .unwrap();
    }
    Ok(out)
}

fn envelope_report(env: &Envelope, which: WhichEnvelope) -> EnvelopeReport {
    EnvelopeReport {
        which,
        edges: env.graph.edges().map(|(a, b)| [a, b]).collect(),
        creation: env.creation.to_string(),
        build_order: env.build_order.clone(),
    }
}

fn envelope_cmd(
    d: &DegreeSequence,
    which: WhichEnvelope,
    format: GraphFormat,
    json: bool,
) -> Result<String> {
    let env = match which {
        WhichEnvelope::I => intersection_envelope(d)?,
        WhichEnvelope::U => union_envelope(d)?,
    };
    if json {
        let mut r = base_report(d);
        r.graphic = Some(true);
        r.envelope = Some(envelope_report(&env, which));
        return Ok(to_json(&r));
    }
    Ok(match format {
        GraphFormat::Edges => env
            .graph
            .edges()
            .map(|(a, b)| format!("{a} {b}\n"))
            .collect(),
        GraphFormat::Creation => format!(
            "{}\nbuild order: {}\n",
            env.creation,
            join(&env.build_order, " ")
        ),
        GraphFormat::Dot => env.graph.to_dot(),
    })
}

fn set_text(s: &std::collections::BTreeSet<usize>) -> String {
    format!("{{{}}}", join(s, ","))
}

fn decompose(d: &DegreeSequence, json: bool) -> Result<String> {
    let s = canonical_skeleton(d)?;
    if json {
        let mut r = base_report(d);
        r.graphic = Some(true);
        r.split = Some(s.tail.split);
        r.decomposable = Some(s.component_count() >= 2);
        r.eg_zeros = Some(eg_zero_list(d)?);
        r.skeleton = Some(s);
        return Ok(to_json(&r));
    }
    let mut out = String::new();
    writeln!(
        out,
        "{} canonical components, outermost first",
        s.component_count()
    )
    .unwrap();
    for (idx, c) in s.components.iter().enumerate() {
        writeln!(
            out,
            "{:>3}. clique {} independent {}",
            idx + 1,
            set_text(&c.clique),
            set_text(&c.independent)
        )
        .unwrap();
    }
    if s.tail.vertices.is_empty() {
        writeln!(out, "no non-split remainder").unwrap();
    } else {
        writeln!(
            out,
            "remainder {} (not split; last zero {}, last index with difference <= 1 is {})",
            set_text(&s.tail.vertices),
            s.tail.p,
            s.tail.q
        )
        .unwrap();
        if let Some(t) = &s.tail.non_split {
            writeln!(
                out,
                "  forced clique in intersection {}",
                set_text(&t.b_prime)
            )
            .unwrap();
            writeln!(
                out,
                "  forced independent in union   {}",
                set_text(&t.a_double_prime)
            )
            .unwrap();
        }
    }
    Ok(out)
}

fn relation_name(c: Comparison) -> &'static str {
    match c {
        Comparison::Equal => "equal",
        Comparison::Above => "above",
        Comparison::Below => "below",
        Comparison::Incomparable => "incomparable",
        Comparison::Mismatch => "mismatch",
    }
}

fn dominance_cmd(a: &Partition, b: &Partition, json: bool) -> Result<String> {
    let rel = compare(a.terms(), b.terms());
    if json {
        let r = Report {
            n: a.len(),
            sequence: a.to_int_list(),
            dominance: Some(DominanceReport {
                a: a.terms().to_vec(),
                b: b.terms().to_vec(),
                relation: relation_name(rel).into(),
            }),
            ..Report::default()
        };
        return Ok(to_json(&r));
    }
    Ok(match rel {
        Comparison::Equal => format!("{a} = {b}\n"),
        Comparison::Above => format!("{a} ⪰ {b}\n"),
        Comparison::Below => format!("{a} ⪯ {b}\n"),
        Comparison::Incomparable => format!("{a} and {b} are incomparable\n"),
        Comparison::Mismatch => format!("{a} and {b} differ in length or sum\n"),
    })
}

fn covers(b: &Partition, json: bool) -> Result<String> {
    let list = elementary_covers(b.terms());
    if json {
        let r = Report {
            n: b.len(),
            sequence: b.to_int_list(),
            covers: Some(
                list.iter()
                    .map(|c| CoverReport {
                        target: c.target.terms().to_vec(),
                        p: c.p,
                        q: c.q,
                    })
                    .collect(),
            ),
            ..Report::default()
        };
        return Ok(to_json(&r));
    }
    if list.is_empty() {
        return Ok(format!("{b} is maximal\n"));
    }
    Ok(list
        .iter()
        .map(|c| format!("{}  (raise {}, lower {})\n", c.target, c.p, c.q))
        .collect())
}

fn lift(e: &DegreeSequence, json: bool) -> Result<String> {
    let r = lift_to_decomposable(e)?;
    if json {
        let mut report = base_report(e);
        report.graphic = Some(true);
        report.lift = Some(LiftReport {
            target: r.target.terms().to_vec(),
            steps: r
                .steps
                .iter()
                .map(|s| StepReport { p: s.p, q: s.q })
                .collect(),
            fallback: r.fallback,
        });
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    writeln!(out, "source  {}", notation::format_compact(e.terms())).unwrap();
    writeln!(
        out,
        "target  {}",
        notation::format_compact(r.target.terms())
    )
    .unwrap();
    writeln!(out, "steps   {}", r.step_count()).unwrap();
    let mut cur = Partition::from(e);
    for (idx, mv) in r.steps.iter().enumerate() {
        cur = dominance::apply_move(cur.terms(), *mv).expect("lift steps are valid");
        writeln!(
            out,
            "{:>3}. raise {}, lower {} -> {}",
            idx + 1,
            mv.p,
            mv.q,
            notation::format_compact(cur.terms())
        )
        .unwrap();
    }
    if r.fallback {
        writeln!(out, "note: found by searching the upset").unwrap();
    }
    Ok(out)
}

fn oracle(d: &DegreeSequence, cap: usize, json: bool) -> Result<String> {
    require_graphic(d)?;
    let report = forced_pairs_oracle(d, cap)?;
    let fast = classification_matrix(d, Method::Deltas)?;
    let check = OracleCheck {
        count: report.count,
        pairs_agree: fast == report.matrix,
        intersection_agrees: intersection_envelope(d)?.graph == report.intersection,
        union_agrees: union_envelope(d)?.graph == report.union,
    };
    if json {
        let mut r = base_report(d);
        r.graphic = Some(true);
        r.pairs = Some(pair_entries(&report.matrix));
        r.oracle = Some(check);
        return Ok(to_json(&r));
    }
    let mut out = String::new();
    writeln!(out, "realizations  {}", check.count).unwrap();
    out.push_str(&matrix_grid(&report.matrix));
    writeln!(
        out,
        "difference classification agrees  {}",
        yes_no(check.pairs_agree)
    )
    .unwrap();
    writeln!(
        out,
        "intersection envelope agrees      {}",
        yes_no(check.intersection_agrees)
    )
    .unwrap();
    writeln!(
        out,
        "union envelope agrees             {}",
        yes_no(check.union_agrees)
    )
    .unwrap();
    Ok(out)
}
