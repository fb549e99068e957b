//! The `galois` command line.
//!
//! [`run`] takes the raw arguments and returns what to print and the exit
//! status, so the binary is a thin wrapper and tests can drive it in
//! process.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::catalog::{
    check_connection, check_law, check_spec, GcLaw, Implementation, LawName, SpecName,
};
use crate::check::{CheckOptions, DEFAULT_BUDGET};
use crate::connections::{find_non_gc_counterexample, NonGcPair};
use crate::error::CheckError;
use crate::model::{Pred, Seq, Universe};
use crate::oracle::{oracle_spec, SpecCall, SpecOutput};
use crate::orders::{Carrier, OrderName};
use crate::report::{CheckReport, Value, Verdict, Witness};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_APPLICABLE: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckOrder,
    CheckSpec,
    CheckGc,
    CheckLaws,
    FindCounterexample,
    Oracle,
    ListTargets,
}

impl Command {
    fn as_str(self) -> &'static str {
        match self {
            Command::CheckOrder => "check-order",
            Command::CheckSpec => "check-spec",
            Command::CheckGc => "check-gc",
            Command::CheckLaws => "check-laws",
            Command::FindCounterexample => "find-counterexample",
            Command::Oracle => "oracle",
            Command::ListTargets => "list-targets",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Exhaustive checker for easy-hard specifications and Galois connections.
#[derive(Debug, Parser)]
#[command(name = "galois", version)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Order, spec, connection, law or pair, depending on the command.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long = "alphabet", default_value_t = 2)]
    pub alphabet_size: usize,
    #[arg(long, default_value_t = 5)]
    pub max_len: usize,
    /// Predicate bitmask for `oracle` (decimal, 0b.. or 0x..).
    #[arg(long)]
    pub pred: Option<Pred>,
    /// Length bound for `oracle --target take`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma separated elements for `oracle`; `zip` takes `xs;ys`.
    #[arg(long, allow_hyphen_values = true)]
    pub input: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Maximum relation evaluations, e.g. 100000000 or 1e8.
    #[arg(long, value_parser = parse_budget, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Report wall-clock time (makes output vary between runs).
    #[arg(long)]
    pub timing: bool,
}

fn parse_budget(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 => {
            Ok(x as u64)
        }
        _ => Err(format!("not a budget: {s:?}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UniverseInfo {
    pub alphabet_size: usize,
    pub max_len: usize,
}

/// The machine-readable report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub command: String,
    pub target: String,
    pub universe: UniverseInfo,
    pub cases_checked: u64,
    pub verdict: Verdict,
    pub counterexample: Option<Witness>,
    pub elapsed_ms: Option<u64>,
    pub tool_version: String,
    /// `check-order` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub least_element: Option<Value>,
    /// `oracle` only.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
}

/// What the binary should print and return.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

pub fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::NotApplicable => EXIT_NOT_APPLICABLE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => execute(&config),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: EXIT_PASS,
                    stdout: rendered,
                    stderr: String::new(),
                }
            }
        }
    }
}

/// Registered targets, grouped and in a fixed order.
pub fn list_targets() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        (
            "orders",
            OrderName::ALL.iter().map(|o| o.as_str()).collect(),
        ),
        ("specs", SpecName::ALL.iter().map(|s| s.as_str()).collect()),
        ("laws", LawName::ALL.iter().map(|l| l.as_str()).collect()),
        ("pairs", NonGcPair::ALL.iter().map(|p| p.as_str()).collect()),
    ]
}

fn render_targets(format: Format) -> String {
    let groups = list_targets();
    match format {
        Format::Text => {
            let mut out = String::new();
            for (group, names) in groups {
                let _ = writeln!(out, "{group}: {}", names.join(" "));
            }
            out
        }
        Format::Json => {
            let map: serde_json::Map<String, serde_json::Value> = groups
                .into_iter()
                .map(|(g, names)| (g.to_string(), names.into()))
                .collect();
            let mut s = serde_json::to_string_pretty(&serde_json::Value::Object(map))
                .expect("serializable");
            s.push('\n');
            s
        }
    }
}

/// Runs a parsed configuration.
pub fn execute(config: &RunConfig) -> Outcome {
    if config.command == Command::ListTargets {
        return Outcome {
            code: EXIT_PASS,
            stdout: render_targets(config.format),
            stderr: String::new(),
        };
    }
    let Some(target) = config.target.as_deref() else {
        return Outcome::usage(format!("{} needs --target", config.command.as_str()));
    };
    if config.command != Command::Oracle {
        for (flag, given) in [
            ("--pred", config.pred.is_some()),
            ("--n", config.n.is_some()),
            ("--input", config.input.is_some()),
        ] {
            if given {
                return Outcome::usage(format!("{flag} only applies to the oracle command"));
            }
        }
    }
    let u = match Universe::new(config.alphabet_size, config.max_len) {
        Ok(u) => u,
        Err(e) => return Outcome::usage(e),
    };
    let opts = CheckOptions::default()
        .with_budget(config.budget)
        .with_workers(config.workers);
    let started = Instant::now();
    let result = match config.command {
        Command::Oracle => run_oracle(config, target, &u),
        _ => guard(&u, &opts).and_then(|()| run_check(config.command, target, &u, &opts)),
    };
    match result {
        Ok(mut parts) => {
            if config.timing {
                parts.report.elapsed_ms = Some(started.elapsed().as_millis() as u64);
            }
            let code = exit_code(parts.report.verdict);
            let stdout = match config.format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&parts.report).expect("serializable");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&parts.report),
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome::usage(msg),
        Err(Failure::Check(e @ CheckError::Oracle(_))) => Outcome {
            code: EXIT_FAIL,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
        Err(Failure::Check(e)) => Outcome::usage(e),
    }
}

enum Failure {
    Usage(String),
    Check(CheckError),
}

impl From<CheckError> for Failure {
    fn from(e: CheckError) -> Self {
        Failure::Check(e)
    }
}

struct Built {
    report: JsonReport,
}

/// Enumerating a carrier is itself work; refuse universes whose largest
/// carrier (pair sequences) already exceeds the budget.
fn guard(u: &Universe, opts: &CheckOptions) -> Result<(), Failure> {
    let symbols = (u.alphabet_size as u64).saturating_mul(u.alphabet_size as u64);
    let mut total: u64 = 0;
    let mut layer: u64 = 1;
    for _ in 0..=u.max_len {
        total = total.saturating_add(layer);
        layer = layer.saturating_mul(symbols);
    }
    if total > opts.budget {
        return Err(CheckError::UniverseTooLarge {
            projected: total,
            budget: opts.budget,
        }
        .into());
    }
    Ok(())
}

fn report_of(config_command: Command, target: &str, u: &Universe, r: &CheckReport) -> JsonReport {
    JsonReport {
        command: config_command.as_str().to_string(),
        target: target.to_string(),
        universe: UniverseInfo {
            alphabet_size: u.alphabet_size,
            max_len: u.max_len,
        },
        cases_checked: r.cases_checked,
        verdict: r.verdict,
        counterexample: r.counterexample.clone(),
        elapsed_ms: None,
        tool_version: TOOL_VERSION.to_string(),
        least_element: None,
        result: None,
    }
}

fn parse_target<T: std::str::FromStr<Err = String>>(target: &str) -> Result<T, Failure> {
    target.parse().map_err(Failure::Usage)
}

fn run_check(
    command: Command,
    target: &str,
    u: &Universe,
    opts: &CheckOptions,
) -> Result<Built, Failure> {
    let report = match command {
        Command::CheckOrder => {
            let laws = parse_target::<OrderName>(target)?.check_laws(u, opts)?;
            let mut report = report_of(command, target, u, &laws.summary());
            report.least_element = laws.least_element.clone();
            report
        }
        Command::CheckSpec => {
            let r = check_spec(parse_target(target)?, Implementation::Reference, u, opts)?;
            report_of(command, target, u, &r)
        }
        Command::CheckGc => {
            let r = check_connection(parse_target(target)?, GcLaw::Gc, u, opts)?;
            report_of(command, target, u, &r)
        }
        Command::CheckLaws => {
            let r = check_law(parse_target(target)?, u, opts)?;
            report_of(command, target, u, &r)
        }
        Command::FindCounterexample => {
            let pair: NonGcPair = parse_target(target)?;
            match find_non_gc_counterexample(pair, u, opts) {
                Ok(r) => report_of(command, target, u, &r),
                Err(CheckError::NotFound { .. }) => {
                    // every law held; the universe is too small to separate the pair
                    report_of(
                        command,
                        target,
                        u,
                        &CheckReport::pass(format!("non-gc:{pair}"), 0),
                    )
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Oracle | Command::ListTargets => unreachable!("handled by the caller"),
    };
    Ok(Built { report })
}

fn parse_seq(s: &str, u: &Universe) -> Result<Seq, Failure> {
    let xs: Seq = s
        .trim()
        .parse()
        .map_err(|e| Failure::Usage(format!("{e}")))?;
    if let Some(e) = xs.iter().find(|e| e.id() >= u.alphabet_size) {
        return Err(Failure::Usage(format!(
            "element {e} is outside the alphabet of size {}",
            u.alphabet_size
        )));
    }
    Ok(xs)
}

fn run_oracle(config: &RunConfig, target: &str, u: &Universe) -> Result<Built, Failure> {
    let spec: SpecName = parse_target(target)?;
    let input = config.input.as_deref().unwrap_or("");
    let need_pred = || -> Result<Pred, Failure> {
        let p = config
            .pred
            .ok_or_else(|| Failure::Usage(format!("oracle --target {spec} needs --pred")))?;
        if u.alphabet_size < 64 && p.bits() >> u.alphabet_size != 0 {
            return Err(Failure::Usage(format!(
                "predicate {p} mentions elements outside the alphabet of size {}",
                u.alphabet_size
            )));
        }
        Ok(p)
    };
    let call = match spec {
        SpecName::TakeWhile => SpecCall::TakeWhile {
            p: need_pred()?,
            xs: parse_seq(input, u)?,
        },
        SpecName::Filter => SpecCall::Filter {
            p: need_pred()?,
            xs: parse_seq(input, u)?,
        },
        SpecName::DropWhile => SpecCall::DropWhile {
            p: need_pred()?,
            xs: parse_seq(input, u)?,
        },
        SpecName::Take => SpecCall::Take {
            n: config
                .n
                .ok_or_else(|| Failure::Usage("oracle --target take needs --n".into()))?,
            xs: parse_seq(input, u)?,
        },
        SpecName::Zip => {
            let (a, b) = input.split_once(';').ok_or_else(|| {
                Failure::Usage("oracle --target zip needs --input \"xs;ys\"".into())
            })?;
            SpecCall::Zip {
                xs: parse_seq(a, u)?,
                ys: parse_seq(b, u)?,
            }
        }
    };
    let value = match oracle_spec(&call).map_err(CheckError::from)? {
        SpecOutput::Seq(s) => s.to_value(),
        SpecOutput::Pairs(z) => z.to_value(),
    };
    let mut report = report_of(
        Command::Oracle,
        target,
        u,
        &CheckReport::pass(format!("oracle:{spec}"), 1),
    );
    report.result = Some(value);
    Ok(Built { report })
}

fn render_text(r: &JsonReport) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{} {} {} (k={}, L={}): {} cases",
        r.verdict,
        r.command,
        r.target,
        r.universe.alphabet_size,
        r.universe.max_len,
        r.cases_checked
    );
    if let Some(ms) = r.elapsed_ms {
        let _ = write!(out, " in {ms} ms");
    }
    out.push('\n');
    if let Some(v) = &r.result {
        let _ = writeln!(out, "result: {v}");
    }
    if let Some(v) = &r.least_element {
        let _ = writeln!(out, "least element: {v}");
    }
    if let Some(w) = &r.counterexample {
        let _ = writeln!(out, "counterexample to {}", w.law);
        for b in &w.bindings {
            let _ = writeln!(out, "  {} = {}", b.name, b.value);
        }
    }
    out
}
