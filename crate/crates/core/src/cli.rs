//! Command dispatch for the `absorbing` binary. Every command produces one
//! JSON report; key order is sorted and nothing depends on timing, so equal
//! configurations give byte-identical output.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use crate::absorbing::{
    check_chain_comparability, check_colon_two_absorbing, check_element_power,
    check_quotient_reduction, is_n_absorbing, omega, AbsorbingReport, ChainFailure, ColonOutcome,
    ScanMode,
};
use crate::corpus::{builtin_corpus, parse_manifest, scan_corpus};
use crate::error::{Error, HypothesisFailure, RingError};
use crate::ideal::Ideal;
use crate::limits::Limits;
use crate::proof::{prove_radical_power_zero_with, verify_trace, ProofTrace, TraceOptions};
use crate::ring::{Ring, RingDescriptor};

pub const REPORT_SCHEMA: &str = "absorbing-report/1";

pub const EXIT_HOLDS: i32 = 0;
pub const EXIT_FAILS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    CheckAbsorbing,
    Omega,
    RadicalPower,
    Trace,
    VerifyTrace,
    CorpusScan,
    Corollaries,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::CheckAbsorbing => "check-absorbing",
            Command::Omega => "omega",
            Command::RadicalPower => "radical-power",
            Command::Trace => "trace",
            Command::VerifyTrace => "verify-trace",
            Command::CorpusScan => "corpus-scan",
            Command::Corollaries => "corollaries",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandConfig {
    pub command: Command,
    pub ring: Option<String>,
    /// Ideal in text form, `(0)` when absent.
    pub ideal: Option<String>,
    /// Comma-separated generator elements for `trace`.
    pub gens: Option<String>,
    pub n: Option<u32>,
    pub cap: Option<u32>,
    pub limits: Limits,
    pub full_machinery: bool,
    /// Trace or report file for `verify-trace`.
    pub input: Option<PathBuf>,
    pub manifest: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

impl CommandConfig {
    pub fn new(command: Command) -> Self {
        CommandConfig {
            command,
            ring: None,
            ideal: None,
            gens: None,
            n: None,
            cap: None,
            limits: Limits::default(),
            full_machinery: false,
            input: None,
            manifest: None,
            out: None,
        }
    }
}

/// Command-line arguments.
#[derive(Debug, Parser)]
#[command(
    name = "absorbing",
    version,
    about = "n-absorbing ideals of finite commutative rings"
)]
pub struct Args {
    #[arg(value_enum)]
    pub command: Command,
    /// Trace or report file (verify-trace).
    pub input: Option<PathBuf>,
    /// Ring spec, e.g. Zmod:12 or "Product:[Zmod:4,Zmod:3]".
    #[arg(long)]
    pub ring: Option<String>,
    /// Ideal, e.g. "(2)" or "(0)".
    #[arg(long)]
    pub ideal: Option<String>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Largest n tried by the omega search.
    #[arg(long)]
    pub cap: Option<u32>,
    /// Generators for trace, e.g. 2,4,6.
    #[arg(long)]
    pub gens: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_ring_size: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_tuples: Option<u64>,
    /// Sample this many tuples when an exhaustive scan is over the limit.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: Option<u64>,
    /// Run the matrix argument on every trace step.
    #[arg(long)]
    pub full_machinery: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Ring specs, one per line (corpus-scan).
    #[arg(long)]
    pub manifest: Option<PathBuf>,
}

impl Args {
    pub fn into_config(self) -> CommandConfig {
        let mut limits = Limits {
            seed: self.seed,
            ..Limits::default()
        };
        if let Some(s) = self.max_ring_size {
            limits.max_ring_size = s as usize;
        }
        if let Some(t) = self.max_tuples {
            limits.max_scan_tuples = t;
        }
        if let Some(s) = self.samples {
            limits.sample_count = s;
            limits.allow_sampling = true;
        }
        if let Some(c) = self.cap {
            limits.omega_cap = c;
        }
        CommandConfig {
            command: self.command,
            ring: self.ring,
            ideal: self.ideal,
            gens: self.gens,
            n: self.n,
            cap: self.cap,
            limits,
            full_machinery: self.full_machinery,
            input: self.input,
            manifest: self.manifest,
            out: self.out,
        }
    }
}

/// Exit code and report of one command.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
}

impl Outcome {
    pub fn render(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Runs the command and writes its report to `config.out` or stdout.
pub fn run(config: &CommandConfig) -> i32 {
    let outcome = execute(config);
    let text = outcome.render();
    match &config.out {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    outcome.code
}

pub fn execute(config: &CommandConfig) -> Outcome {
    let result = match config.command {
        Command::CheckAbsorbing => check_absorbing_cmd(config),
        Command::Omega => omega_cmd(config),
        Command::RadicalPower => radical_power_cmd(config),
        Command::Trace => trace_cmd(config),
        Command::VerifyTrace => verify_trace_cmd(config),
        Command::CorpusScan => corpus_scan_cmd(config),
        Command::Corollaries => corollaries_cmd(config),
    };
    let (code, body) = result.unwrap_or_else(|e| (exit_code(&e), error_body(&e)));
    let mut report = Map::new();
    report.insert("schema".into(), json!(REPORT_SCHEMA));
    report.insert("command".into(), json!(config.command.name()));
    report.extend(body);
    Outcome {
        code,
        report: Value::Object(report),
    }
}

type Body = Map<String, Value>;
type CmdResult = Result<(i32, Body), Error>;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::ResourceLimit { .. } | Error::Ring(RingError::TooLarge { .. }) => EXIT_LIMIT,
        Error::Parse(_) | Error::Ring(_) | Error::Domain(_) | Error::ImproperIdeal => EXIT_USAGE,
        Error::Precondition(_)
        | Error::Hypothesis(_)
        | Error::InvariantViolation(_)
        | Error::TraceInconsistency(_) => EXIT_FAILS,
    }
}

fn error_body(err: &Error) -> Body {
    let kind = match err {
        Error::Ring(_) => "ring",
        Error::Parse(_) => "parse",
        Error::ResourceLimit { .. } => "resource_limit",
        Error::Domain(_) => "usage",
        Error::ImproperIdeal => "improper_ideal",
        Error::Precondition(_) => "precondition",
        Error::Hypothesis(_) => "hypothesis",
        Error::InvariantViolation(_) => "invariant_violation",
        Error::TraceInconsistency(_) => "trace_inconsistency",
    };
    let mut body = Body::new();
    body.insert("error".into(), json!(kind));
    body.insert("message".into(), json!(err.to_string()));
    match err {
        Error::Hypothesis(HypothesisFailure::NotThreeAbsorbing { witness }) => {
            body.insert("witness".into(), json!(witness));
        }
        Error::Hypothesis(HypothesisFailure::RadicalNotPrime { pair }) => {
            body.insert("witness".into(), json!(pair));
        }
        _ => {}
    }
    body
}

fn body(value: Value) -> Body {
    match value {
        Value::Object(m) => m,
        _ => unreachable!("reports are objects"),
    }
}

fn holds_code(holds: bool) -> i32 {
    if holds {
        EXIT_HOLDS
    } else {
        EXIT_FAILS
    }
}

fn ring_of(config: &CommandConfig) -> Result<Ring, Error> {
    let spec = config
        .ring
        .as_deref()
        .ok_or_else(|| Error::Domain("--ring is required".into()))?;
    let desc: RingDescriptor = spec.parse()?;
    Ok(Ring::build_with_cap(&desc, config.limits.max_ring_size)?)
}

fn ideal_of(ring: &Ring, config: &CommandConfig) -> Result<Ideal, Error> {
    Ideal::parse(ring, config.ideal.as_deref().unwrap_or("(0)"))
}

fn n_of(config: &CommandConfig) -> Result<u32, Error> {
    config
        .n
        .ok_or_else(|| Error::Domain("--n is required".into()))
}

fn absorbing_json(ring: &Ring, r: &AbsorbingReport) -> Value {
    let mut m = body(json!({
        "n": r.n,
        "holds": r.holds,
        "tuples_scanned": r.tuples_scanned,
    }));
    match r.mode {
        ScanMode::Exhaustive => {
            m.insert("mode".into(), json!("exhaustive"));
        }
        ScanMode::Sampled { seed, samples } => {
            m.insert("mode".into(), json!("sampled"));
            m.insert("seed".into(), json!(seed));
            m.insert("samples".into(), json!(samples));
        }
    }
    if let Some(w) = &r.witness {
        m.insert("witness".into(), json!(ring.render_all(w.tuple())));
    }
    Value::Object(m)
}

fn check_absorbing_cmd(config: &CommandConfig) -> CmdResult {
    let ring = ring_of(config)?;
    let ideal = ideal_of(&ring, config)?;
    let n = n_of(config)?;
    let report = is_n_absorbing(&ideal, n, &config.limits)?;
    let mut b = body(absorbing_json(&ring, &report));
    b.insert("ring".into(), json!(ring.to_string()));
    b.insert("ideal".into(), json!(ideal.render()));
    Ok((holds_code(report.holds), b))
}

fn omega_cmd(config: &CommandConfig) -> CmdResult {
    let ring = ring_of(config)?;
    let ideal = ideal_of(&ring, config)?;
    let cap = config.cap.unwrap_or(config.limits.omega_cap);
    let report = omega(&ideal, cap, &config.limits)?;
    let b = body(json!({
        "ring": ring.to_string(),
        "ideal": ideal.render(),
        "cap": cap,
        "omega": report.value,
        "exceeds_cap": report.exceeds_cap(),
        "levels": report.levels.iter().map(|l| absorbing_json(&ring, l)).collect::<Vec<_>>(),
    }));
    Ok((holds_code(!report.exceeds_cap()), b))
}

fn radical_power_cmd(config: &CommandConfig) -> CmdResult {
    let ring = ring_of(config)?;
    let ideal = ideal_of(&ring, config)?;
    let limits = &config.limits;
    let n = match config.n {
        Some(n) => n,
        None => omega(&ideal, config.cap.unwrap_or(limits.omega_cap), limits)?
            .value
            .ok_or_else(|| {
                Error::Precondition(format!(
                    "{} is not n-absorbing for any n up to the cap; pass --n",
                    ideal.render()
                ))
            })?,
    };
    let radical = ideal.radical();
    let power = radical.power(n)?;
    let holds = power.is_subset(&ideal);
    let absorbing = is_n_absorbing(&ideal, n, limits)?;
    let reduction = check_quotient_reduction(&ideal, n, limits)?;
    let mut b = body(json!({
        "ring": ring.to_string(),
        "ideal": ideal.render(),
        "n": n,
        "radical": radical.render(),
        "radical_power": power.render(),
        "holds": holds,
        "n_absorbing": absorbing.holds,
        "element_power_holds": check_element_power(&ideal, n),
        "reduction": {
            "absorbing_in_ring": reduction.absorbing_in_ring,
            "zero_absorbing_in_quotient": reduction.zero_absorbing_in_quotient,
            "radical_power_in_ring": reduction.radical_power_in_ring,
            "radical_power_in_quotient": reduction.radical_power_in_quotient,
        },
    }));
    if let Some(w) = power.elements().find(|&e| !ideal.contains(e)) {
        b.insert("witness".into(), json!(ring.render(w)));
    }
    Ok((holds_code(holds), b))
}

fn trace_cmd(config: &CommandConfig) -> CmdResult {
    let ring = ring_of(config)?;
    let text = config
        .gens
        .as_deref()
        .ok_or_else(|| Error::Domain("--gens is required".into()))?;
    let gens = ring.parse_elements(text)?;
    if let Some(n) = config.n {
        if n as usize != gens.len() {
            return Err(Error::Domain(format!(
                "--n {n} does not match {} generators",
                gens.len()
            )));
        }
    }
    let options = TraceOptions {
        full_machinery: config.full_machinery,
    };
    let trace = prove_radical_power_zero_with(&ring, &gens, &config.limits, options)?;
    let verdict = verify_trace(&trace, &config.limits);
    let b = body(json!({
        "holds": verdict.valid,
        "verification": verdict,
        "trace": trace,
    }));
    Ok((holds_code(verdict.valid), b))
}

fn verify_trace_cmd(config: &CommandConfig) -> CmdResult {
    let path = config
        .input
        .as_ref()
        .ok_or_else(|| Error::Domain("verify-trace needs a trace file".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Domain(format!("{} is not JSON: {e}", path.display())))?;
    let trace_value = match value.get("trace") {
        Some(t) => t.clone(),
        None => value,
    };
    let trace: ProofTrace = serde_json::from_value(trace_value)
        .map_err(|e| Error::Domain(format!("malformed trace: {e}")))?;
    let verdict = verify_trace(&trace, &config.limits);
    let b = body(json!({
        "ring": trace.ring,
        "generators": trace.generators,
        "valid": verdict.valid,
        "verification": verdict,
    }));
    Ok((holds_code(verdict.valid), b))
}

fn corpus_scan_cmd(config: &CommandConfig) -> CmdResult {
    let rings = match &config.manifest {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
            parse_manifest(&text)?
        }
        None => builtin_corpus(),
    };
    let mut limits = config.limits.clone();
    if let Some(cap) = config.cap {
        limits.omega_cap = cap;
    }
    let mut entries = Vec::new();
    let mut failures = 0usize;
    let mut sharp = 0usize;
    let mut unknown = 0usize;
    let mut ideals = 0usize;
    let mut code = EXIT_HOLDS;
    for (desc, result) in rings.iter().zip(scan_corpus(&rings, &limits)) {
        match result {
            Ok(summary) => {
                failures += summary.failures;
                sharp += summary.sharp_instances;
                unknown += summary.omega_unknown;
                ideals += summary.ideals.len();
                entries.push(serde_json::to_value(&summary).expect("summary serializes"));
            }
            Err(e) => {
                code = code.max(exit_code(&e));
                let mut m = error_body(&e);
                m.insert("ring".into(), json!(desc.to_string()));
                entries.push(Value::Object(m));
            }
        }
    }
    if failures > 0 {
        code = code.max(EXIT_FAILS);
    }
    let b = body(json!({
        "rings": entries,
        "ring_count": rings.len(),
        "ideal_count": ideals,
        "failures": failures,
        "sharp_instances": sharp,
        "omega_unknown": unknown,
        "omega_cap": limits.omega_cap,
        "holds": failures == 0,
    }));
    Ok((code, b))
}

fn corollaries_cmd(config: &CommandConfig) -> CmdResult {
    let ring = ring_of(config)?;
    let ideal = ideal_of(&ring, config)?;
    let colon = check_colon_two_absorbing(&ideal, &config.limits)?;
    let chain = check_chain_comparability(&ideal, &config.limits)?;
    let colons: Vec<Value> = colon
        .checks
        .iter()
        .map(|c| {
            let outcome = match &c.outcome {
                ColonOutcome::UnitIdealSkipped => json!("unit_ideal"),
                ColonOutcome::Checked(r) => absorbing_json(&ring, r),
            };
            json!({"x": ring.render(c.x), "colon": c.colon.render(), "two_absorbing": outcome})
        })
        .collect();
    let failures: Vec<Value> = chain
        .failures
        .iter()
        .map(|f| match *f {
            ChainFailure::Incomparable { x, y, z } => {
                json!({"kind": "incomparable", "elements": ring.render_all(&[x, y, z])})
            }
            ChainFailure::NotPrime { x, y } => {
                json!({"kind": "not_prime", "elements": ring.render_all(&[x, y])})
            }
        })
        .collect();
    let holds = colon.holds() && chain.holds();
    let b = body(json!({
        "ring": ring.to_string(),
        "ideal": ideal.render(),
        "radical": colon.radical.render(),
        "holds": holds,
        "colon_two_absorbing": {"holds": colon.holds(), "checks": colons},
        "chain": {
            "holds": chain.holds(),
            "triples_checked": chain.triples_checked,
            "unit_skipped": chain.unit_skipped,
            "colon_ideals": chain.colon_ideals.iter().map(Ideal::render).collect::<Vec<_>>(),
            "failures": failures,
        },
    }));
    Ok((holds_code(holds), b))
}
