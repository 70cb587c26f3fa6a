//! Command implementations behind the `quatlin` binary.
//!
//! Every command returns an [`Outcome`] instead of printing, so tests can
//! drive the exact same code path the binary uses. Output is deterministic:
//! canonical rational strings, fixed field order, fixed pivoting.

pub mod document;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::autos::{self, AutoKind, CATALOG_NAMES};
use crate::error::Error;
use crate::frames::{self, Expansion, Frame, RankReport};
use crate::linop::Operator4;
use crate::scalarq::Quaternion;
use document::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;
pub const EXIT_PRECONDITION: i32 = 4;

pub const OUTPUT_ENV: &str = "QUATLIN_OUTPUT";

const DEMO_NOTE: &str = "RIGHT_UNITS and AUTO are this tool's own frames; coefficient values \
depend on the frame, so only the vanishing pattern is comparable across bases.";

#[derive(Debug, Parser)]
#[command(name = "quatlin", version, about = "Exact operator calculus for the real quaternion algebra")]
pub struct Cli {
    /// Also show floating-point approximations (display only).
    #[arg(long, global = true)]
    pub approx: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a matrix against a frame with quaternion coefficients.
    Decompose {
        /// Builtin frame name (RIGHT_UNITS, AUTO, PAPER_ATTEMPT) or a 4-term spec.
        #[arg(long)]
        frame: String,
        file: PathBuf,
    },
    /// Classify a matrix as linear, antilinear, or neither.
    Check { file: PathBuf },
    /// Recover q with f(x) = q x q^-1 from a linear automorphism.
    Recover { file: PathBuf },
    /// Rank report of a family of frame terms.
    Rank {
        #[arg(long, allow_hyphen_values = true)]
        spec: String,
    },
    /// Every catalog operator with its order, kind, and conjugator.
    Catalog,
    /// Worked expansions of x -> ax, x -> xa and x -> ax + xa.
    Demo {
        /// Quaternion coefficients "w,x,y,z".
        #[arg(long, default_value = "1,2,3,4", allow_hyphen_values = true)]
        a: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Pretty,
    Json,
}

impl OutputMode {
    /// Reads `QUATLIN_OUTPUT`; unset means pretty.
    pub fn from_env_value(value: Option<&str>) -> Result<Self, Error> {
        match value {
            None | Some("pretty") => Ok(OutputMode::Pretty),
            Some("json") => Ok(OutputMode::Json),
            Some(other) => Err(Error::Parse(format!("{OUTPUT_ENV} must be `json` or `pretty`, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Options {
    pub mode: OutputMode,
    pub approx: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::Parse(_) | Error::UnknownName(_) | Error::DivisionByZero => EXIT_PARSE,
            Error::SingularFrame(_) => EXIT_SINGULAR,
            Error::NotAnAutomorphism(_) | Error::ZeroQuaternion | Error::IndexOutOfRange { .. } => {
                EXIT_PRECONDITION
            }
            Error::Internal(_) => EXIT_INTERNAL,
        };
        Outcome { stdout: String::new(), stderr: format!("error: {err}\n"), code }
    }
}

fn emit<T: Serialize>(doc: &T, opts: Options, pretty: impl FnOnce(&T, bool) -> String) -> String {
    match opts.mode {
        OutputMode::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
            s.push('\n');
            s
        }
        OutputMode::Pretty => pretty(doc, opts.approx),
    }
}

pub fn run(command: &Command, opts: Options) -> Outcome {
    let result = match command {
        Command::Decompose { frame, file } => decompose(file, frame, opts),
        Command::Check { file } => check(file, opts),
        Command::Recover { file } => recover(file, opts),
        Command::Rank { spec } => rank(spec, opts),
        Command::Catalog => Ok(catalog(opts)),
        Command::Demo { a } => a
            .parse::<Quaternion>()
            .and_then(|a| demo(&a, opts))
            .map_err(|e| Outcome::error(&e)),
    };
    result.unwrap_or_else(|e| e)
}

type CmdResult = Result<Outcome, Outcome>;

fn load(path: &Path) -> Result<(Option<String>, Operator4), Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        Outcome::error(&Error::Parse(format!("cannot read {}: {e}", path.display())))
    })?;
    let doc = MatrixDocument::parse(&text).map_err(|e| Outcome::error(&e))?;
    let op = doc.operator().map_err(|e| Outcome::error(&e))?;
    Ok((doc.label, op))
}

fn approx_coeffs(e: &Expansion, on: bool) -> Option<Vec<[f64; 4]>> {
    on.then(|| e.coefficients.iter().map(Quaternion::to_f64).collect())
}

/// Expands and re-verifies; an expansion that does not reconstruct its
/// input is never reported.
fn verified_expansion(f: &Operator4, frame: &Frame) -> Result<Expansion, Error> {
    let e = frames::expand(f, frame)?;
    if e.reconstruct() != *f {
        return Err(Error::Internal(format!("expansion in {} does not reconstruct", frame.name())));
    }
    Ok(e)
}

fn rank_doc(command: &'static str, spec: String, terms: &[frames::FrameTerm], report: &RankReport) -> RankDoc {
    let verified = report.witness_holds(terms);
    RankDoc::new(command, spec, terms.iter().map(ToString::to_string).collect(), report, verified)
}

pub fn decompose(path: &Path, frame_spec: &str, opts: Options) -> CmdResult {
    let (label, f) = load(path)?;
    let frame = frames::parse_frame(frame_spec).map_err(|e| Outcome::error(&e))?;
    match verified_expansion(&f, &frame) {
        Ok(e) => {
            let doc = ExpansionDoc {
                command: "decompose",
                label,
                frame: frame.name().to_string(),
                terms: frame.terms().iter().map(ToString::to_string).collect(),
                coefficients: e.coefficients.iter().map(quat_strings).collect(),
                vanishing: e.vanishing(),
                verified: true,
                approx: approx_coeffs(&e, opts.approx),
            };
            Ok(Outcome::ok(emit(&doc, opts, render_expansion)))
        }
        Err(Error::SingularFrame(report)) => {
            let doc = rank_doc("decompose", frame.name().to_string(), frame.terms(), &report);
            Err(Outcome {
                stdout: emit(&doc, opts, render_rank),
                stderr: format!("error: frame {} is singular (rank {} of 16)\n", frame.name(), report.rank),
                code: EXIT_SINGULAR,
            })
        }
        Err(e) => Err(Outcome::error(&e)),
    }
}

pub fn check(path: &Path, opts: Options) -> CmdResult {
    let (label, f) = load(path)?;
    let kind = autos::classify(&f);
    let conditions = autos::check_coordinate_conditions(&f);
    let (reason, witness) = match &kind {
        AutoKind::Neither(failure) => (Some(failure.to_string()), Some(failure.witness())),
        _ => (None, None),
    };
    let doc = CheckDoc {
        command: "check",
        label,
        kind: kind.tag(),
        coordinate_conditions: conditions.is_ok(),
        violation: conditions.err().map(|v| v.to_string()),
        reason,
        witness,
    };
    Ok(Outcome::ok(emit(&doc, opts, render_check)))
}

pub fn recover(path: &Path, opts: Options) -> CmdResult {
    let (label, f) = load(path)?;
    let conj = autos::recover_conjugator(&f).map_err(|e| Outcome::error(&e))?;
    let verified = conj.operator() == f;
    if !verified {
        return Err(Outcome::error(&Error::Internal("recovered conjugator does not verify".to_string())));
    }
    let doc = RecoverDoc {
        command: "recover",
        label,
        conjugator: quat_strings(conj.quaternion()),
        verified,
        approx: opts.approx.then(|| conj.quaternion().to_f64()),
    };
    Ok(Outcome::ok(emit(&doc, opts, render_recover)))
}

pub fn rank(spec: &str, opts: Options) -> CmdResult {
    let terms = frames::parse_terms(spec).map_err(|e| Outcome::error(&e))?;
    let report = frames::family_rank(&terms).map_err(|e| Outcome::error(&e))?;
    let doc = rank_doc("rank", spec.trim().to_string(), &terms, &report);
    Ok(Outcome::ok(emit(&doc, opts, render_rank)))
}

pub fn catalog_document() -> CatalogDoc {
    let entries = CATALOG_NAMES
        .iter()
        .map(|&name| {
            let op = autos::catalog(name).expect("catalog names resolve");
            let kind = autos::classify(&op);
            let conjugator = kind
                .is_linear()
                .then(|| autos::recover_conjugator(&op).expect("linear catalog entries are inner"))
                .map(|c| quat_strings(c.quaternion()));
            CatalogEntryDoc {
                name,
                description: autos::catalog_description(name).expect("described"),
                matrix: op.to_strings(),
                order: op.order(12),
                kind: kind.tag(),
                conjugator,
            }
        })
        .collect();
    CatalogDoc { command: "catalog", entries }
}

pub fn catalog(opts: Options) -> Outcome {
    Outcome::ok(emit(&catalog_document(), opts, render_catalog))
}

/// The worked example operators for coefficient `a`.
pub fn demo_operators(a: &Quaternion) -> Vec<(&'static str, &'static str, Operator4)> {
    let left = Operator4::left_mul(a);
    let right = Operator4::right_mul(a);
    let sum = &left + &right;
    let after_cycle = left.compose(&autos::cyclic_op());
    vec![
        ("left", "x -> a x", left),
        ("right", "x -> x a", right),
        ("sum", "x -> a x + x a", sum),
        ("left_after_A1", "x -> a A1(x)", after_cycle),
    ]
}

pub fn demo_document(a: &Quaternion, approx: bool) -> Result<DemoDoc, Error> {
    let frame_names = [frames::BuiltinFrame::RightUnits, frames::BuiltinFrame::Auto];
    let mut examples = Vec::new();
    for (name, map, op) in demo_operators(a) {
        let mut expansions = Vec::new();
        for b in frame_names {
            let frame = b.frame();
            let e = verified_expansion(&op, &frame)?;
            expansions.push(DemoExpansionDoc {
                frame: b.name().to_string(),
                coefficients: e.coefficients.iter().map(quat_strings).collect(),
                vanishing: e.vanishing(),
                verified: true,
                approx: approx_coeffs(&e, approx),
            });
        }
        examples.push(DemoExampleDoc { name, map, matrix: op.to_strings(), expansions });
    }
    let attempt = frames::BuiltinFrame::PaperAttempt.frame();
    let report = frames::family_rank(attempt.terms())?;
    Ok(DemoDoc {
        command: "demo",
        a: quat_strings(a),
        examples,
        singular_attempt: rank_doc("rank", attempt.name().to_string(), attempt.terms(), &report),
        dimension: DimensionDoc {
            real_dimension: frames::operator_rank(&frames::elementary_operators()),
            frame_terms: 4,
        },
        note: DEMO_NOTE,
    })
}

pub fn demo(a: &Quaternion, opts: Options) -> Result<Outcome, Error> {
    let doc = demo_document(a, opts.approx)?;
    Ok(Outcome::ok(emit(&doc, opts, render_demo)))
}

// ---- pretty rendering ----

fn fmt_quat(q: &QuatStrings) -> String {
    format!("({})", q.join(", "))
}

fn fmt_approx(v: &[f64; 4]) -> String {
    format!("~({:.6}, {:.6}, {:.6}, {:.6})", v[0], v[1], v[2], v[3])
}

fn write_matrix(out: &mut String, m: &MatrixStrings, indent: &str) {
    let width = m.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in m {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{indent}[{}]", cells.join(" "));
    }
}

fn write_coefficients(out: &mut String, coeffs: &[QuatStrings], approx: Option<&Vec<[f64; 4]>>, indent: &str) {
    for (t, c) in coeffs.iter().enumerate() {
        let _ = write!(out, "{indent}a{t} = {}", fmt_quat(c));
        if let Some(v) = approx {
            let _ = write!(out, "  {}", fmt_approx(&v[t]));
        }
        out.push('\n');
    }
}

fn fmt_vanishing(v: &[usize]) -> String {
    if v.is_empty() {
        "none".to_string()
    } else {
        v.iter().map(|t| format!("a{t}")).collect::<Vec<_>>().join(", ")
    }
}

fn render_expansion(doc: &ExpansionDoc, _approx: bool) -> String {
    let mut out = String::new();
    if let Some(label) = &doc.label {
        let _ = writeln!(out, "label: {label}");
    }
    let _ = writeln!(out, "frame: {} [{}]", doc.frame, doc.terms.join(" "));
    write_coefficients(&mut out, &doc.coefficients, doc.approx.as_ref(), "");
    let _ = writeln!(out, "vanishing: {}", fmt_vanishing(&doc.vanishing));
    let _ = writeln!(out, "verified: {}", doc.verified);
    out
}

fn render_rank(doc: &RankDoc, _approx: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family: {}", doc.spec);
    let _ = writeln!(out, "terms: {}", doc.terms.join(" "));
    let _ = writeln!(out, "unknowns: {}", doc.unknowns);
    let _ = writeln!(out, "rank: {}", doc.rank);
    let _ = writeln!(out, "nullity: {}", doc.nullity);
    match &doc.witness {
        None => {
            let _ = writeln!(out, "witness: none");
        }
        Some(w) => {
            let _ = writeln!(out, "witness:");
            for (t, c) in w.iter().enumerate() {
                let _ = writeln!(out, "  {} : {}", doc.terms[t], fmt_quat(c));
            }
            let _ = writeln!(out, "witness verified: {}", doc.witness_verified);
        }
    }
    out
}

fn render_check(doc: &CheckDoc, _approx: bool) -> String {
    let mut out = String::new();
    if let Some(label) = &doc.label {
        let _ = writeln!(out, "label: {label}");
    }
    let _ = writeln!(out, "kind: {}", doc.kind);
    let verdict = match &doc.violation {
        None => "pass".to_string(),
        Some(v) => format!("fail ({v})"),
    };
    let _ = writeln!(out, "coordinate conditions: {verdict}");
    if let Some(reason) = &doc.reason {
        let _ = writeln!(out, "reason: {reason}");
    }
    if let Some(w) = &doc.witness {
        let _ = writeln!(out, "witness: {w}");
    }
    out
}

fn render_recover(doc: &RecoverDoc, _approx: bool) -> String {
    let mut out = String::new();
    if let Some(label) = &doc.label {
        let _ = writeln!(out, "label: {label}");
    }
    let _ = write!(out, "conjugator: {}", fmt_quat(&doc.conjugator));
    if let Some(v) = &doc.approx {
        let _ = write!(out, "  {}", fmt_approx(v));
    }
    out.push('\n');
    let _ = writeln!(out, "verified: {}", doc.verified);
    out
}

fn render_catalog(doc: &CatalogDoc, _approx: bool) -> String {
    let mut out = String::new();
    for (n, e) in doc.entries.iter().enumerate() {
        if n > 0 {
            out.push('\n');
        }
        let _ = writeln!(out, "{}: {}", e.name, e.description);
        write_matrix(&mut out, &e.matrix, "  ");
        let order = e.order.map_or("infinite or > 12".to_string(), |o| o.to_string());
        let _ = writeln!(out, "  order: {order}");
        let _ = writeln!(out, "  kind: {}", e.kind);
        if let Some(c) = &e.conjugator {
            let _ = writeln!(out, "  conjugator: {}", fmt_quat(c));
        }
    }
    out
}

fn render_demo(doc: &DemoDoc, _approx: bool) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "a = {}", fmt_quat(&doc.a));
    for ex in &doc.examples {
        let _ = writeln!(out, "\n{}: {}", ex.name, ex.map);
        write_matrix(&mut out, &ex.matrix, "  ");
        for e in &ex.expansions {
            let _ = writeln!(out, "  in {}:", e.frame);
            write_coefficients(&mut out, &e.coefficients, e.approx.as_ref(), "    ");
            let _ = writeln!(out, "    vanishing: {}", fmt_vanishing(&e.vanishing));
            let _ = writeln!(out, "    verified: {}", e.verified);
        }
    }
    let _ = writeln!(out, "\nsingular attempt:");
    for line in render_rank(&doc.singular_attempt, false).lines() {
        let _ = writeln!(out, "  {line}");
    }
    let _ = writeln!(
        out,
        "\ndimension: real span of x -> e_s x e_t is {}; every invertible frame has {} terms",
        doc.dimension.real_dimension, doc.dimension.frame_terms
    );
    let _ = writeln!(out, "note: {}", doc.note);
    out
}
