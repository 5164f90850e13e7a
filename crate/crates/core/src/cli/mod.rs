//! Command-line front end: JSON documents in, JSON reports, text tables or DOT out.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 validation error, 3 cap exceeded,
//! 4 internal invariant violation.

mod spec;

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::alphabet::{Alphabet, Subgroup};
use crate::blocks::Word;
use crate::ca::GroupCA;
use crate::catalog;
use crate::chains::{self, ChainReport, RationalOrbitShift};
use crate::error::Error;
use crate::periodic::{self, ExtensionSearch, TransferGraph};
use crate::shiftspace::GroupSFT;

pub use spec::{
    build_alphabet, build_ca, build_sft, build_tuple, parse_spec, AlphabetSpec, CaSpec, ChainSpec, ElemSpec,
    ParseError, QuerySpec, SftKind, SftSpec, SpecDocument, Template, Violation, SCHEMA, SCHEMA_VERSION,
};

/// Largest subgroup listed element by element in reports.
const LIST_LIMIT: u64 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Debug, Parser)]
#[command(name = "gsft", version, about = "Group subshifts of finite type over Z")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Fan out independent density and chain work items.
    #[arg(long, global = true)]
    pub parallel: bool,
    #[arg(long, global = true, default_value_t = 16)]
    pub max_window: usize,
    #[arg(long, global = true, default_value_t = 12)]
    pub max_period: usize,
    #[arg(long, global = true, default_value_t = 64)]
    pub max_iterations: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Replace the pattern group by the true window restriction.
    Essentialize { files: Vec<PathBuf> },
    /// The k-blocks of a shift.
    Blocks {
        files: Vec<PathBuf>,
        #[arg(long)]
        k: usize,
    },
    /// Present a shift on a wider window.
    Widen {
        files: Vec<PathBuf>,
        #[arg(long)]
        to: usize,
    },
    Intersect { files: Vec<PathBuf> },
    Equals { files: Vec<PathBuf> },
    /// Image of a shift (default: the full shift) under a CA.
    Image { files: Vec<PathBuf> },
    /// Preimage of a shift over the codomain of a CA.
    Preimage { files: Vec<PathBuf> },
    Kernel { files: Vec<PathBuf> },
    LimitSet { files: Vec<PathBuf> },
    /// Periodic points of one period, or periodic extensions of query words.
    Periodic {
        files: Vec<PathBuf>,
        #[arg(long)]
        period: Option<usize>,
    },
    Irreducible { files: Vec<PathBuf> },
    WCheck {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 4)]
        max_filler: usize,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    Density {
        files: Vec<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
    },
    /// Run the chain section of each file.
    Chain { files: Vec<PathBuf> },
    MarkovWindow { files: Vec<PathBuf> },
    /// Periodic points of x_(n+1) = a x_n over the rationals.
    Counterexample {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
    },
    /// Transfer graph in GraphViz format.
    ExportDot { files: Vec<PathBuf> },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

enum Failure {
    Io(String),
    Parse(PathBuf, ParseError),
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Run<T> = std::result::Result<T, Failure>;

struct Loaded {
    path: PathBuf,
    doc: SpecDocument,
    alphabet: Option<Alphabet>,
    sft: Option<GroupSFT>,
    ca: Option<GroupCA>,
}

fn load(path: &Path) -> Run<Loaded> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let doc = parse_spec(&bytes).map_err(|e| Failure::Parse(path.to_path_buf(), e))?;
    let invalid = |v| Failure::Parse(path.to_path_buf(), ParseError::Invalid(v));
    let alphabet = doc.alphabet.as_ref().map(build_alphabet).transpose()?;
    let sft = doc.sft.as_ref().map(|s| build_sft(s, alphabet.as_ref(), "/sft")).transpose().map_err(invalid)?;
    let ca = doc.ca.as_ref().map(|c| build_ca(c, alphabet.as_ref(), "/ca")).transpose().map_err(invalid)?;
    Ok(Loaded {
        path: path.to_path_buf(),
        doc,
        alphabet,
        sft,
        ca,
    })
}

struct Inputs(Vec<Loaded>);

impl Inputs {
    fn sfts(&self) -> Vec<&GroupSFT> {
        self.0.iter().filter_map(|l| l.sft.as_ref()).collect()
    }

    fn one_sft(&self) -> Run<&GroupSFT> {
        match self.sfts().as_slice() {
            [s] => Ok(s),
            other => Err(Failure::Usage(format!("expected one sft section, found {}", other.len()))),
        }
    }

    fn two_sfts(&self) -> Run<(&GroupSFT, &GroupSFT)> {
        match self.sfts().as_slice() {
            [a, b] => Ok((a, b)),
            other => Err(Failure::Usage(format!("expected two sft sections, found {}", other.len()))),
        }
    }

    fn one_ca(&self) -> Run<&GroupCA> {
        let cas: Vec<&GroupCA> = self.0.iter().filter_map(|l| l.ca.as_ref()).collect();
        match cas.as_slice() {
            [c] => Ok(c),
            other => Err(Failure::Usage(format!("expected one ca section, found {}", other.len()))),
        }
    }

    fn optional_sft(&self) -> Run<Option<&GroupSFT>> {
        match self.sfts().as_slice() {
            [] => Ok(None),
            [s] => Ok(Some(s)),
            other => Err(Failure::Usage(format!("expected at most one sft section, found {}", other.len()))),
        }
    }
}

fn subgroup_json(s: &Subgroup) -> Run<Value> {
    let mut v = json!({
        "length": s.len(),
        "order": s.order().to_string(),
        "rank": s.rank(),
        "generators": s.generators(),
    });
    if s.order() <= LIST_LIMIT.into() {
        v["elements"] = json!(s.elements(LIST_LIMIT)?);
    }
    Ok(v)
}

fn sft_json(s: &GroupSFT) -> Run<Value> {
    Ok(json!({
        "alphabet": s.alphabet().describe(),
        "window": s.window(),
        "essential": s.is_essential(),
        "pattern": subgroup_json(s.pattern())?,
    }))
}

fn ca_json(c: &GroupCA) -> Value {
    json!({
        "domain": c.domain().describe(),
        "codomain": c.codomain().describe(),
        "memory": c.memory(),
        "matrix": c.rule().matrix(),
    })
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report types serialize")
}

fn chain_json(r: &ChainReport) -> Value {
    to_value(r)
}

struct Output {
    json: Value,
    table: Option<String>,
    dot: Option<String>,
}

impl Output {
    fn json(json: Value) -> Self {
        Output {
            json,
            table: None,
            dot: None,
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Generic rendering: `key: value` lines, nested objects indented, arrays of rows one per line.
fn table_of(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        table_of(x, indent + 2, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object()) => {
                        let _ = writeln!(out, "{pad}{k}: {} rows", items.len());
                        for i in items {
                            let cells: Vec<String> = match i {
                                Value::Object(m) => m.iter().map(|(k, x)| format!("{k}={}", scalar(x))).collect(),
                                other => vec![scalar(other)],
                            };
                            let _ = writeln!(out, "{pad}  {}", cells.join("  "));
                        }
                    }
                    other => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(other));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn run_chain_doc(l: &Loaded, inputs: &Inputs, cli: &Cli) -> Run<(Value, String)> {
    let Some(chain) = &l.doc.chain else {
        return Err(Failure::Usage(format!("{} has no chain section", l.path.display())));
    };
    match chain {
        ChainSpec::Images => {
            let ca = l.ca.as_ref().map_or_else(|| inputs.one_ca(), Ok)?;
            let s = match &l.sft {
                Some(s) => s.clone(),
                None => GroupSFT::full(ca.domain()),
            };
            let r = chains::iterate_images(ca, &s, cli.max_window, cli.max_iterations)?;
            Ok((chain_json(&r), r.to_table()))
        }
        ChainSpec::Intersection { shifts } => {
            let built = shifts
                .iter()
                .enumerate()
                .map(|(i, s)| build_sft(s, l.alphabet.as_ref(), &format!("/chain/shifts/{i}")))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|v| Failure::Parse(l.path.clone(), ParseError::Invalid(v)))?;
            let (s, report) = chains::intersect_chain(&built)?;
            let mut v = chain_json(&report);
            v["result"] = sft_json(&s)?;
            Ok((v, report.to_table()))
        }
        ChainSpec::Markov { template, cap } => {
            let r = match template {
                Template::ShiftEquality => {
                    let a = l
                        .alphabet
                        .clone()
                        .ok_or_else(|| Failure::Usage("shift_equality needs an alphabet".into()))?;
                    chains::markov_window_demo("x_n = x_(n+k) for k <= n", |k| catalog::shift_equality(&a, k), *cap, cli.max_window)?
                }
                Template::Repeat => {
                    let s = l
                        .sft
                        .clone()
                        .ok_or_else(|| Failure::Usage("the repeat template needs an sft section".into()))?;
                    chains::markov_window_demo("one constraint repeated", |_| Ok(s.clone()), *cap, cli.max_window)?
                }
                Template::KernelPowers => {
                    let ca = l
                        .ca
                        .clone()
                        .ok_or_else(|| Failure::Usage("the kernel_powers template needs a ca section".into()))?;
                    chains::markov_window_demo(
                        "kernels of CA powers",
                        |n| {
                            let p = catalog::power(&ca, n);
                            Ok(p.kernel())
                        },
                        *cap,
                        cli.max_window,
                    )?
                }
            };
            let v = json!({
                "window": r.window,
                "sft": sft_json(&r.sft)?,
                "report": chain_json(&r.report),
            });
            Ok((v, format!("window: {}\n{}", r.window, r.report.to_table())))
        }
    }
}

fn files_of(cmd: &Command) -> &[PathBuf] {
    match cmd {
        Command::Essentialize { files }
        | Command::Blocks { files, .. }
        | Command::Widen { files, .. }
        | Command::Intersect { files }
        | Command::Equals { files }
        | Command::Image { files }
        | Command::Preimage { files }
        | Command::Kernel { files }
        | Command::LimitSet { files }
        | Command::Periodic { files, .. }
        | Command::Irreducible { files }
        | Command::WCheck { files, .. }
        | Command::Density { files, .. }
        | Command::Chain { files }
        | Command::MarkovWindow { files }
        | Command::ExportDot { files } => files,
        Command::Counterexample { .. } => &[],
    }
}

fn execute(cli: &Cli) -> Run<Output> {
    let inputs = Inputs(files_of(&cli.command).iter().map(|p| load(p)).collect::<Run<Vec<_>>>()?);
    let out = match &cli.command {
        Command::Essentialize { .. } => {
            let s = inputs.one_sft()?;
            let (e, steps) = s.essentialize_counted();
            Output::json(json!({
                "verb": "essentialize",
                "input": sft_json(s)?,
                "result": sft_json(&e)?,
                "iterations": steps,
            }))
        }
        Command::Blocks { k, .. } => {
            let s = inputs.one_sft()?;
            Output::json(json!({ "verb": "blocks", "k": k, "blocks": subgroup_json(&s.blocks(*k)?)? }))
        }
        Command::Widen { to, .. } => {
            let s = inputs.one_sft()?;
            Output::json(json!({ "verb": "widen", "result": sft_json(&s.widen(*to)?)? }))
        }
        Command::Intersect { .. } => {
            let (a, b) = inputs.two_sfts()?;
            Output::json(json!({ "verb": "intersect", "result": sft_json(&a.intersect(b)?)? }))
        }
        Command::Equals { .. } => {
            let (a, b) = inputs.two_sfts()?;
            Output::json(json!({
                "verb": "equals",
                "equal": a.equals(b)?,
                "first_contains_second": a.contains(b)?,
                "second_contains_first": b.contains(a)?,
            }))
        }
        Command::Image { .. } => {
            let ca = inputs.one_ca()?;
            let s = inputs.optional_sft()?.cloned().unwrap_or_else(|| GroupSFT::full(ca.domain()));
            let r = ca.image_report(&s, cli.max_window)?;
            Output::json(json!({
                "verb": "image",
                "ca": ca_json(ca),
                "result": sft_json(&r.sft)?,
                "window": r.window,
                "minimal_window": r.minimal_window,
                "rejected_windows": r.rejected_windows,
            }))
        }
        Command::Preimage { .. } => {
            let ca = inputs.one_ca()?;
            let s = inputs.one_sft()?;
            Output::json(json!({ "verb": "preimage", "result": sft_json(&ca.preimage_sft(s)?)? }))
        }
        Command::Kernel { .. } => {
            let ca = inputs.one_ca()?;
            Output::json(json!({ "verb": "kernel", "ca": ca_json(ca), "result": sft_json(&ca.kernel())? }))
        }
        Command::LimitSet { .. } => {
            let ca = inputs.one_ca()?;
            let s = inputs.optional_sft()?.cloned().unwrap_or_else(|| GroupSFT::full(ca.domain()));
            let l = ca.limit_set(&s, cli.max_window, cli.max_iterations)?;
            let orders: Vec<String> = l.chain.iter().map(|c| c.pattern().order().to_string()).collect();
            Output::json(json!({
                "verb": "limit-set",
                "stability_index": l.stability_index,
                "omega": sft_json(&l.omega)?,
                "windows": l.windows,
                "chain_orders": orders,
            }))
        }
        Command::Periodic { period, .. } => {
            let s = inputs.one_sft()?;
            let mut v = json!({ "verb": "periodic" });
            if let Some(p) = period {
                v["period"] = json!(p);
                v["points"] = subgroup_json(&periodic::periodic_points(s, *p)?)?;
            }
            let words: Vec<&Vec<ElemSpec>> = inputs
                .0
                .iter()
                .filter_map(|l| l.doc.query.as_ref())
                .flat_map(|q| q.words.iter())
                .collect();
            if period.is_none() && words.is_empty() {
                return Err(Failure::Usage("give --period or query words".into()));
            }
            let mut search = ExtensionSearch::new(s, cli.max_period);
            let mut rows = Vec::new();
            for w in words {
                let t = build_tuple(s.alphabet(), w)?;
                let legal = s.blocks(t.len().max(1))?.contains(&t);
                let found = if legal { search.find(&Word::new(s.alphabet(), t.clone())?)? } else { None };
                rows.push(json!({
                    "word": t,
                    "legal": legal,
                    "extension": found.as_ref().map(|e| e.config.word().as_slice().to_vec()),
                    "method": found.map(|e| to_value(&e.method)),
                }));
            }
            if !rows.is_empty() {
                v["max_period"] = json!(cli.max_period);
                v["extensions"] = json!(rows);
            }
            Output::json(v)
        }
        Command::Irreducible { .. } => {
            let s = inputs.one_sft()?;
            let g = TransferGraph::new(s)?;
            Output::json(json!({
                "verb": "irreducible",
                "irreducible": periodic::is_irreducible(s)?,
                "vertices": g.vertices.len(),
                "edges": g.edges.len(),
                "components": g.components().len(),
            }))
        }
        Command::WCheck { max_filler, max_len, .. } => {
            let s = inputs.one_sft()?;
            let mut v = to_value(&periodic::w_subshift_check(s, *max_filler, *max_len)?);
            v["verb"] = json!("w-check");
            v["max_filler"] = json!(max_filler);
            v["max_len"] = json!(max_len);
            Output::json(v)
        }
        Command::Density { max_len, .. } => {
            let s = inputs.one_sft()?;
            let mut v = to_value(&periodic::density_report(s, *max_len, cli.max_period, cli.parallel)?);
            v["verb"] = json!("density");
            Output::json(v)
        }
        Command::Chain { .. } => {
            let items: Vec<&Loaded> = inputs.0.iter().filter(|l| l.doc.chain.is_some()).collect();
            if items.is_empty() {
                return Err(Failure::Usage("no file has a chain section".into()));
            }
            let results: Vec<Run<(Value, String)>> = if cli.parallel {
                items.par_iter().map(|l| run_chain_doc(l, &inputs, cli)).collect()
            } else {
                items.iter().map(|l| run_chain_doc(l, &inputs, cli)).collect()
            };
            let (reports, tables): (Vec<Value>, Vec<String>) = results.into_iter().collect::<Run<Vec<_>>>()?.into_iter().unzip();
            let mut table = String::new();
            for (l, t) in items.iter().zip(&tables) {
                let name = l.path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned());
                let _ = writeln!(table, "# {name}");
                table.push_str(t);
            }
            Output {
                json: json!({ "verb": "chain", "chains": reports }),
                table: Some(table),
                dot: None,
            }
        }
        Command::MarkovWindow { .. } => {
            let l = match inputs.0.as_slice() {
                [l] => l,
                other => return Err(Failure::Usage(format!("expected one file, found {}", other.len()))),
            };
            if !matches!(l.doc.chain, Some(ChainSpec::Markov { .. })) {
                return Err(Failure::Usage("markov-window needs a chain of kind markov".into()));
            }
            let (mut v, table) = run_chain_doc(l, &inputs, cli)?;
            v["verb"] = json!("markov-window");
            Output {
                json: v,
                table: Some(table),
                dot: None,
            }
        }
        Command::Counterexample { a } => {
            let r = RationalOrbitShift::parse(a)?.counterexample(cli.max_period)?;
            let mut v = to_value(&r);
            v["verb"] = json!("counterexample");
            Output::json(v)
        }
        Command::ExportDot { .. } => {
            let s = inputs.one_sft()?;
            let g = TransferGraph::new(s)?;
            let dot = g.to_dot();
            Output {
                json: json!({ "verb": "export-dot", "dot": dot }),
                table: None,
                dot: Some(dot),
            }
        }
    };
    Ok(out)
}

fn error_json(f: &Failure) -> (i32, Value) {
    match f {
        Failure::Io(m) => (1, json!({ "error": { "kind": "io", "message": m } })),
        Failure::Parse(path, ParseError::Json(m)) => (
            2,
            json!({ "error": { "kind": "malformed_json", "file": path.display().to_string(), "message": m } }),
        ),
        Failure::Parse(path, ParseError::Invalid(v)) => (
            2,
            json!({ "error": { "kind": "validation", "file": path.display().to_string(), "violations": v } }),
        ),
        Failure::Usage(m) => (2, json!({ "error": { "kind": "usage", "message": m } })),
        Failure::Lib(Error::CapExceeded { what, limit, hint }) => (
            3,
            json!({ "error": { "kind": "cap_exceeded", "what": what, "limit": limit, "hint": hint } }),
        ),
        Failure::Lib(e @ Error::Internal(_)) => (4, json!({ "error": { "kind": "internal", "message": e.to_string() } })),
        Failure::Lib(e) => (2, json!({ "error": { "kind": "validation", "message": e.to_string() } })),
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// Runs one parsed invocation.
pub fn run(cli: &Cli) -> Outcome {
    let default = if matches!(cli.command, Command::ExportDot { .. }) { Format::Dot } else { Format::Json };
    let format = cli.format.unwrap_or(default);
    let result = execute(cli).and_then(|out| match format {
        Format::Json => Ok(pretty(&out.json)),
        Format::Table => Ok(out.table.unwrap_or_else(|| {
            let mut t = String::new();
            table_of(&out.json, 0, &mut t);
            t
        })),
        Format::Dot => out
            .dot
            .ok_or_else(|| Failure::Usage("--format dot is only available for export-dot".into())),
    });
    match result {
        Ok(stdout) => Outcome { code: 0, stdout },
        Err(f) => {
            let (code, v) = error_json(&f);
            let stdout = if format == Format::Table {
                let mut t = String::new();
                table_of(&v, 0, &mut t);
                t
            } else {
                pretty(&v)
            };
            Outcome { code, stdout }
        }
    }
}

/// Parses `args` (program name first) and runs them.
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => Outcome {
            code: if e.use_stderr() { 2 } else { 0 },
            stdout: e.render().to_string(),
        },
    }
}
