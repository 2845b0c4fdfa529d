//! Command-line surface: argument parsing, report envelopes, and text, JSON
//! and CSV rendering.
//!
//! Exit codes: 0 success, 2 usage error, 3 falsification candidate, 4 I/O or
//! checkpoint error.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use chrono::{SecondsFormat, Utc};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::almostprime::{canonical_case_systems, render_pattern, CaseSystems};
use crate::arith::is_prime;
use crate::cases::{verify_prime_side, verify_semiprime_theorem, ProofTrace, Verdict};
use crate::error::Error;
use crate::pairs::{classify_pair, divisor_pairs_of_square, LegRejection};
use crate::search::{
    boxes_with_side, scan_range, search_side, BoxClass, BoxReport, Diagonal, ScanFilter,
    ScanOptions, ScanReport, SideReport,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_FALSIFICATION: i32 = 3;
pub const EXIT_IO: i32 = 4;

pub const CHECKPOINT_DIR_ENV: &str = "BRICKWRIGHT_CHECKPOINT_DIR";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Semiprime,
    Prime,
}

impl From<FilterArg> for ScanFilter {
    fn from(f: FilterArg) -> Self {
        match f {
            FilterArg::All => ScanFilter::All,
            FilterArg::Semiprime => ScanFilter::SemiprimeOnly,
            FilterArg::Prime => ScanFilter::PrimeOnly,
        }
    }
}

fn positive(s: &str) -> Result<u64, String> {
    match s.trim().parse::<u64>() {
        Ok(0) => Err("positive integer required".to_string()),
        Ok(n) => Ok(n),
        Err(e) => Err(format!("positive integer required ({e})")),
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "brickwright",
    version,
    about = "Exact case analysis and brute-force search for perfect cuboids"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor pairs of a^2 and the legs they generate.
    Pairs {
        #[arg(value_parser = positive)]
        a: u64,
    },
    /// Proof trace for side p*q, or for a prime side when q is omitted.
    Verify {
        #[arg(value_parser = positive)]
        p: u64,
        #[arg(value_parser = positive)]
        q: Option<u64>,
    },
    /// Check every side p*q <= max with both the case engine and the oracle.
    Theorem {
        #[arg(long, value_parser = positive)]
        max: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// All Euler bricks and perfect boxes with side a.
    Side {
        #[arg(value_parser = positive)]
        a: u64,
    },
    /// Oracle scan over a range of sides.
    Scan {
        #[arg(value_parser = positive)]
        lo: u64,
        #[arg(value_parser = positive)]
        hi: u64,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Checkpoint file; defaults to a file under $BRICKWRIGHT_CHECKPOINT_DIR when set.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Discard existing checkpoint progress.
        #[arg(long)]
        ignore_checkpoint: bool,
        /// Sides per checkpoint record.
        #[arg(long, default_value_t = 1000, value_parser = positive)]
        batch_size: u64,
    },
    /// Canonical case systems for sides with k distinct prime factors.
    Cases {
        #[arg(long)]
        k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub s: u128,
    pub t: u128,
    pub leg: Option<u128>,
    pub hyp: Option<u128>,
    /// `leg`, `zero_leg` or `parity`.
    pub status: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairsReport {
    pub side: u64,
    pub pairs: Vec<PairRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub side: u64,
    pub p: u64,
    pub q: u64,
    pub trace: Option<ProofTrace>,
    pub engine_error: Option<String>,
    pub oracle_perfect: Vec<BoxReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremSummary {
    pub max: u64,
    pub semiprimes_checked: u64,
    pub engine_all_eliminated: u64,
    pub witnesses_rechecked: u64,
    pub oracle_clear: u64,
    pub agreements: u64,
    /// Prime squares have no case analysis; the oracle alone covers them.
    pub prime_squares_checked: u64,
    pub prime_square_perfect: u64,
    pub disagreements: Vec<Disagreement>,
}

impl TheoremSummary {
    pub fn consistent(&self) -> bool {
        self.agreements == self.semiprimes_checked
            && self.disagreements.is_empty()
            && self.prime_square_perfect == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Payload {
    Pairs(PairsReport),
    ProofTrace(ProofTrace),
    Theorem(TheoremSummary),
    Side(SideReport),
    Scan(ScanReport),
    CaseSystems(CaseSystems),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub tool_version: String,
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub started: String,
    pub finished: String,
    pub payload: Payload,
}

impl ReportEnvelope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

fn now() -> String {
    Utc::now().to_rfc3339_opts(SecondsFormat::Millis, true)
}

/// The two independent routes `theorem` compares. Tests swap in faulty
/// routes to exercise the disagreement path.
#[derive(Clone, Copy)]
pub struct TheoremPaths {
    pub engine: fn(u64, u64) -> crate::Result<ProofTrace>,
    pub oracle: fn(u64) -> crate::Result<Vec<BoxReport>>,
}

impl Default for TheoremPaths {
    fn default() -> Self {
        TheoremPaths {
            engine: verify_semiprime_theorem,
            oracle: boxes_with_side,
        }
    }
}

enum Failure {
    Usage(String),
    Lib(Error),
    Output(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Output(e)
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Checkpoint { .. } | Error::Io { .. } => EXIT_IO,
        Error::Survivor { .. } => EXIT_FALSIFICATION,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` and runs; returns the process exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli, TheoremPaths::default(), out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{rendered}");
            } else {
                let _ = write!(out, "{rendered}");
            }
            code
        }
    }
}

pub fn run(cli: &Cli, paths: TheoremPaths, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let started = now();
    let result = execute(cli, paths);
    let (command, inputs, payload) = match result {
        Ok(x) => x,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return EXIT_USAGE;
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
        Err(Failure::Output(e)) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_IO;
        }
    };
    let envelope = ReportEnvelope {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        command: command.to_string(),
        inputs,
        started,
        finished: now(),
        payload,
    };

    if let Err(e) = render(&envelope, cli.format, out) {
        let _ = writeln!(err, "error: {e}");
        return EXIT_IO;
    }

    let falsified = match &envelope.payload {
        Payload::Theorem(s) => !s.consistent(),
        Payload::ProofTrace(t) => !t.all_eliminated(),
        Payload::Scan(s) => s.filter != ScanFilter::All && s.perfect_total > 0,
        _ => false,
    };
    if falsified {
        let _ = writeln!(err, "FALSIFICATION CANDIDATE");
        if let Payload::Theorem(s) = &envelope.payload {
            for d in &s.disagreements {
                let _ = writeln!(
                    err,
                    "{}",
                    serde_json::to_string_pretty(d).expect("serializes")
                );
            }
        }
        return EXIT_FALSIFICATION;
    }
    EXIT_OK
}

type Executed = (&'static str, BTreeMap<String, String>, Payload);

fn inputs<const N: usize>(kv: [(&str, String); N]) -> BTreeMap<String, String> {
    kv.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn execute(cli: &Cli, paths: TheoremPaths) -> Result<Executed, Failure> {
    match &cli.command {
        Command::Pairs { a } => Ok((
            "pairs",
            inputs([("a", a.to_string())]),
            Payload::Pairs(pairs_report(*a)?),
        )),
        Command::Verify { p, q } => {
            let trace = match q {
                Some(q) => {
                    if !(is_prime(*p) && is_prime(*q) && p != q) {
                        return Err(Failure::Usage(
                            "arguments must be distinct primes".to_string(),
                        ));
                    }
                    verify_semiprime_theorem(*p, *q)?
                }
                None => {
                    if !is_prime(*p) {
                        return Err(Failure::Usage("argument must be a prime".to_string()));
                    }
                    verify_prime_side(*p)?
                }
            };
            let mut kv = inputs([("p", p.to_string())]);
            if let Some(q) = q {
                kv.insert("q".to_string(), q.to_string());
            }
            Ok(("verify", kv, Payload::ProofTrace(trace)))
        }
        Command::Theorem { max, jobs } => Ok((
            "theorem",
            inputs([("max", max.to_string())]),
            Payload::Theorem(theorem(*max, *jobs, paths)?),
        )),
        Command::Side { a } => Ok((
            "side",
            inputs([("a", a.to_string())]),
            Payload::Side(search_side(*a)?),
        )),
        Command::Scan {
            lo,
            hi,
            filter,
            jobs,
            checkpoint,
            ignore_checkpoint,
            batch_size,
        } => {
            let filter = ScanFilter::from(*filter);
            let checkpoint = checkpoint.clone().or_else(|| {
                std::env::var_os(CHECKPOINT_DIR_ENV).map(|dir| {
                    PathBuf::from(dir).join(format!("scan-{lo}-{hi}-{}.jsonl", filter.name()))
                })
            });
            let opts = ScanOptions {
                jobs: *jobs,
                batch_size: *batch_size,
                checkpoint: checkpoint.clone(),
                ignore_checkpoint: *ignore_checkpoint,
                stop_after: None,
            };
            let report = scan_range(*lo, *hi, filter, &opts)?;
            let mut kv = inputs([
                ("lo", lo.to_string()),
                ("hi", hi.to_string()),
                ("filter", filter.name().to_string()),
            ]);
            if let Some(path) = checkpoint {
                kv.insert("checkpoint".to_string(), path.display().to_string());
            }
            Ok(("scan", kv, Payload::Scan(report)))
        }
        Command::Cases { k } => Ok((
            "cases",
            inputs([("k", k.to_string())]),
            Payload::CaseSystems(canonical_case_systems(*k)?),
        )),
    }
}

pub fn pairs_report(a: u64) -> crate::Result<PairsReport> {
    let pairs = divisor_pairs_of_square(a)?
        .into_iter()
        .map(|pair| {
            let (leg, hyp, status) = match classify_pair(pair) {
                Ok(sol) => (Some(sol.leg), Some(sol.hyp), "leg"),
                Err(LegRejection::ZeroLeg) => (None, None, "zero_leg"),
                Err(LegRejection::Parity) => (None, None, "parity"),
            };
            PairRow {
                s: pair.s,
                t: pair.t,
                leg,
                hyp,
                status: status.to_string(),
            }
        })
        .collect();
    Ok(PairsReport { side: a, pairs })
}

/// Distinct-prime pairs `p < q` with `p * q <= max`, ordered by side.
pub fn semiprime_sides(max: u64) -> Vec<(u64, u64)> {
    let primes: Vec<u64> = (2..=max / 2).filter(|&n| is_prime(n)).collect();
    let mut out = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        if p.saturating_mul(p) > max {
            break;
        }
        for &q in &primes[i + 1..] {
            if p * q > max {
                break;
            }
            out.push((p, q));
        }
    }
    out.sort_by_key(|&(p, q)| p * q);
    out
}

/// Runs both routes on every side `pq <= max` with distinct primes, and the
/// oracle alone on prime squares.
pub fn theorem(max: u64, jobs: usize, paths: TheoremPaths) -> crate::Result<TheoremSummary> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to build thread pool");
    let sides = semiprime_sides(max);

    struct Row {
        agree: bool,
        eliminated: bool,
        rechecked: bool,
        clear: bool,
        disagreement: Option<Disagreement>,
    }

    let rows: Vec<Row> = pool.install(|| {
        sides
            .par_iter()
            .map(|&(p, q)| -> crate::Result<Row> {
                let side = p * q;
                let oracle_perfect: Vec<BoxReport> = (paths.oracle)(side)?
                    .into_iter()
                    .filter(|b| b.classification == BoxClass::Perfect)
                    .collect();
                let (trace, engine_error) = match (paths.engine)(p, q) {
                    Ok(t) => (Some(t), None),
                    Err(e @ Error::Overflow(_)) => return Err(e),
                    Err(e) => (None, Some(e.to_string())),
                };
                let eliminated = trace.as_ref().is_some_and(ProofTrace::all_eliminated);
                let rechecked = trace.as_ref().is_some_and(ProofTrace::recheck);
                let clear = oracle_perfect.is_empty();
                let agree = eliminated && rechecked && clear;
                let disagreement = (!agree).then_some(Disagreement {
                    side,
                    p,
                    q,
                    trace,
                    engine_error,
                    oracle_perfect,
                });
                Ok(Row {
                    agree,
                    eliminated,
                    rechecked,
                    clear,
                    disagreement,
                })
            })
            .collect::<crate::Result<Vec<_>>>()
    })?;

    let squares: Vec<u64> = (2..)
        .take_while(|&p: &u64| p.saturating_mul(p) <= max)
        .filter(|&p| is_prime(p))
        .collect();
    let square_perfect: u64 = pool
        .install(|| {
            squares
                .par_iter()
                .map(|&p| -> crate::Result<u64> {
                    Ok((paths.oracle)(p * p)?
                        .iter()
                        .filter(|b| b.classification == BoxClass::Perfect)
                        .count() as u64)
                })
                .collect::<crate::Result<Vec<_>>>()
        })?
        .into_iter()
        .sum();

    let count = |f: fn(&Row) -> bool| rows.iter().filter(|r| f(r)).count() as u64;
    Ok(TheoremSummary {
        max,
        semiprimes_checked: rows.len() as u64,
        engine_all_eliminated: count(|r| r.eliminated),
        witnesses_rechecked: count(|r| r.rechecked),
        oracle_clear: count(|r| r.clear),
        agreements: count(|r| r.agree),
        prime_squares_checked: squares.len() as u64,
        prime_square_perfect: square_perfect,
        disagreements: rows.into_iter().filter_map(|r| r.disagreement).collect(),
    })
}

fn render(env: &ReportEnvelope, format: Format, out: &mut dyn Write) -> std::io::Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", env.to_json())?,
        Format::Text => render_text(&env.payload, out)?,
        Format::Csv => render_csv(&env.payload, out).map_err(std::io::Error::other)?,
    }
    Ok(())
}

fn diag_cell(d: &Diagonal) -> String {
    match d {
        Diagonal::Value(v) => v.to_string(),
        Diagonal::Nonsquare(r) => format!("sqrt({r})"),
    }
}

fn class_name(c: BoxClass) -> &'static str {
    match c {
        BoxClass::Perfect => "perfect",
        BoxClass::EulerBrick => "euler_brick",
        BoxClass::Partial => "partial",
        BoxClass::None => "none",
    }
}

fn box_cells(b: &BoxReport) -> Vec<String> {
    vec![
        b.a.to_string(),
        b.b.to_string(),
        b.c.to_string(),
        diag_cell(&b.d),
        diag_cell(&b.e),
        diag_cell(&b.f),
        diag_cell(&b.g),
        class_name(b.classification).to_string(),
    ]
}

const BOX_HEADER: [&str; 8] = ["a", "b", "c", "d", "e", "f", "g", "classification"];

fn opt(x: Option<u128>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn render_csv(payload: &Payload, out: &mut dyn Write) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_writer(out);
    match payload {
        Payload::Pairs(r) => {
            w.write_record(["s", "t", "leg", "hyp", "status"])?;
            for row in &r.pairs {
                w.write_record([
                    row.s.to_string(),
                    row.t.to_string(),
                    opt(row.leg),
                    opt(row.hyp),
                    row.status.clone(),
                ])?;
            }
        }
        Payload::ProofTrace(t) => {
            w.write_record(["p", "q", "branch", "reason", "witnesses"])?;
            for b in &t.branches {
                let witnesses = b
                    .witness_values
                    .iter()
                    .map(|w| format!("{}={}", w.name, w.value))
                    .collect::<Vec<_>>()
                    .join(";");
                w.write_record([
                    t.p.to_string(),
                    t.q.to_string(),
                    b.branch_label.clone(),
                    serde_json::to_value(b.reason)
                        .expect("reason")
                        .as_str()
                        .unwrap_or_default()
                        .to_string(),
                    witnesses,
                ])?;
            }
        }
        Payload::Theorem(s) => {
            w.write_record([
                "max",
                "semiprimes_checked",
                "engine_all_eliminated",
                "witnesses_rechecked",
                "oracle_clear",
                "agreements",
                "prime_squares_checked",
                "prime_square_perfect",
                "disagreements",
            ])?;
            w.write_record(
                [
                    s.max,
                    s.semiprimes_checked,
                    s.engine_all_eliminated,
                    s.witnesses_rechecked,
                    s.oracle_clear,
                    s.agreements,
                    s.prime_squares_checked,
                    s.prime_square_perfect,
                    s.disagreements.len() as u64,
                ]
                .map(|x| x.to_string()),
            )?;
        }
        Payload::Side(r) => {
            w.write_record(BOX_HEADER)?;
            for b in &r.boxes {
                w.write_record(box_cells(b))?;
            }
        }
        Payload::Scan(r) => {
            w.write_record(BOX_HEADER)?;
            let mut hits: Vec<&BoxReport> = r.perfect_hits.iter().chain(&r.brick_hits).collect();
            hits.sort_by_key(|b| (b.a, b.b, b.c));
            for b in hits {
                w.write_record(box_cells(b))?;
            }
        }
        Payload::CaseSystems(s) => {
            w.write_record([
                "class",
                "width",
                "leg_b",
                "leg_c",
                "diagonal",
                "merged_primes",
            ])?;
            for (i, c) in s.leg_classes.iter().enumerate() {
                for d in &c.diagonals {
                    let merged = d
                        .source
                        .merged
                        .iter()
                        .map(|g| {
                            g.iter()
                                .map(|i| format!("p{i}"))
                                .collect::<Vec<_>>()
                                .join("*")
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    w.write_record([
                        (i + 1).to_string(),
                        c.width.to_string(),
                        render_pattern(&c.leg_b),
                        render_pattern(&c.leg_c),
                        render_pattern(&d.pattern),
                        merged,
                    ])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

fn render_text(payload: &Payload, out: &mut dyn Write) -> std::io::Result<()> {
    match payload {
        Payload::Pairs(r) => {
            let legs = r.pairs.iter().filter(|p| p.leg.is_some()).count();
            writeln!(
                out,
                "a = {}: {} factor pairs of a^2, {} legs",
                r.side,
                r.pairs.len(),
                legs
            )?;
            for row in &r.pairs {
                match (row.leg, row.hyp) {
                    (Some(leg), Some(hyp)) => writeln!(
                        out,
                        "  ({}, {})  leg b = {leg}, hypotenuse d = {hyp}",
                        row.s, row.t
                    )?,
                    _ => writeln!(
                        out,
                        "  ({}, {})  {}",
                        row.s,
                        row.t,
                        row.status.replace('_', " ")
                    )?,
                }
            }
        }
        Payload::ProofTrace(t) => {
            if t.p == 1 {
                writeln!(out, "prime side {}", t.q)?;
            } else {
                writeln!(out, "side {} = {} * {}", t.side(), t.p, t.q)?;
            }
            for a in &t.assignments {
                writeln!(
                    out,
                    "  {}: (d-b, d+b) = {} {}, (e-c, e+c) = {} {}",
                    a.case,
                    a.pair_b,
                    a.entry_b.symbol(),
                    a.pair_c,
                    a.entry_c.symbol()
                )?;
            }
            for b in &t.branches {
                let ws = b
                    .witness_values
                    .iter()
                    .map(|w| format!("{}={}", w.name, w.value))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(
                    out,
                    "  {:<36} {:<34} {ws}",
                    b.branch_label,
                    format!("{:?}", b.reason)
                )?;
            }
            for n in &t.notes {
                writeln!(out, "  note: {n}")?;
            }
            match &t.verdict {
                Verdict::AllEliminated => {
                    writeln!(out, "verdict: all {} branches eliminated", t.branches.len())?
                }
                Verdict::CounterexampleFound(b) => {
                    writeln!(out, "verdict: COUNTEREXAMPLE {:?}", box_cells(b))?
                }
            }
        }
        Payload::Theorem(s) => {
            writeln!(out, "sides p*q <= {} with distinct primes", s.max)?;
            writeln!(out, "  checked                 {}", s.semiprimes_checked)?;
            writeln!(out, "  case engine eliminated  {}", s.engine_all_eliminated)?;
            writeln!(out, "  witnesses rechecked     {}", s.witnesses_rechecked)?;
            writeln!(out, "  oracle found no perfect {}", s.oracle_clear)?;
            let pct = match (s.agreements * 10_000).checked_div(s.semiprimes_checked) {
                Some(bp) => format!("{}.{:02}", bp / 100, bp % 100),
                None => "100.00".to_string(),
            };
            writeln!(out, "  agreement               {} ({pct}%)", s.agreements)?;
            writeln!(
                out,
                "prime squares (oracle only): {} checked, {} perfect",
                s.prime_squares_checked, s.prime_square_perfect
            )?;
            for d in &s.disagreements {
                writeln!(out, "  DISAGREEMENT at side {} = {} * {}", d.side, d.p, d.q)?;
            }
        }
        Payload::Side(r) => {
            writeln!(
                out,
                "a = {}: {} legs, {} bricks or perfect boxes",
                r.side,
                r.legs.len(),
                r.boxes.len()
            )?;
            write_box_table(out, r.boxes.iter())?;
        }
        Payload::Scan(r) => {
            writeln!(
                out,
                "scan {}..={} filter {}: {} sides searched, {} perfect, {} bricks{}",
                r.range.lo,
                r.range.hi,
                r.filter.name(),
                r.sides_processed,
                r.perfect_total,
                r.brick_total,
                match r.resumed_from {
                    Some(c) => format!(" (resumed after {c})"),
                    None => String::new(),
                }
            )?;
            write_box_table(out, r.perfect_hits.iter().chain(&r.brick_hits))?;
        }
        Payload::CaseSystems(s) => {
            writeln!(
                out,
                "k = {}: {} leg classes, {} systems",
                s.k,
                s.leg_classes.len(),
                s.triple_count
            )?;
            for (i, c) in s.leg_classes.iter().enumerate() {
                writeln!(
                    out,
                    "  class {} (width {}): legs {} and {}",
                    i + 1,
                    c.width,
                    render_pattern(&c.leg_b),
                    render_pattern(&c.leg_c)
                )?;
                for d in &c.diagonals {
                    writeln!(out, "    (g-f, g+f) = {}", render_pattern(&d.pattern))?;
                }
            }
            for n in &s.interpretation {
                writeln!(out, "  note: {n}")?;
            }
        }
    }
    Ok(())
}

fn write_box_table<'a>(
    out: &mut dyn Write,
    boxes: impl Iterator<Item = &'a BoxReport>,
) -> std::io::Result<()> {
    for b in boxes {
        let c = box_cells(b);
        writeln!(
            out,
            "  a={} b={} c={}  d={} e={} f={} g={}  {}",
            c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]
        )?;
    }
    Ok(())
}
