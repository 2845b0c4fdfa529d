//! Brute-force box oracle and checkpointed side-range scans.
//!
//! The oracle is independent of the case engine in [`crate::cases`]: it only
//! enumerates the legs that a side admits and tests every diagonal equation
//! directly.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, classify_side, is_perfect_square, SideClass};
use crate::error::{Error, Result};
use crate::pairs::legs_of_side;

/// A diagonal length, or the radicand when it is not an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Diagonal {
    Value(u128),
    Nonsquare(u128),
}

impl Diagonal {
    fn of_radicand(r: u128) -> Self {
        match is_perfect_square(r) {
            Some(v) => Diagonal::Value(v),
            None => Diagonal::Nonsquare(r),
        }
    }

    pub fn is_integral(&self) -> bool {
        matches!(self, Diagonal::Value(_))
    }

    pub fn value(&self) -> Option<u128> {
        match *self {
            Diagonal::Value(v) => Some(v),
            Diagonal::Nonsquare(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoxClass {
    /// All three face diagonals and the space diagonal are integers.
    Perfect,
    /// Integer face diagonals, irrational space diagonal.
    EulerBrick,
    /// At least one integer diagonal.
    Partial,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BoxReport {
    pub a: u128,
    pub b: u128,
    pub c: u128,
    /// `d^2 = a^2 + b^2`
    pub d: Diagonal,
    /// `e^2 = a^2 + c^2`
    pub e: Diagonal,
    /// `f^2 = b^2 + c^2`
    pub f: Diagonal,
    /// `g^2 = a^2 + b^2 + c^2`
    pub g: Diagonal,
    pub classification: BoxClass,
}

pub fn verify_box(a: u128, b: u128, c: u128) -> Result<BoxReport> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::Nonpositive(
            "box sides (positive side lengths required)",
        ));
    }
    let what = "box diagonal";
    let (a2, b2, c2) = (
        arith::square(a, what)?,
        arith::square(b, what)?,
        arith::square(c, what)?,
    );
    let ab = arith::add(a2, b2, what)?;
    let d = Diagonal::of_radicand(ab);
    let e = Diagonal::of_radicand(arith::add(a2, c2, what)?);
    let f = Diagonal::of_radicand(arith::add(b2, c2, what)?);
    let g = Diagonal::of_radicand(arith::add(ab, c2, what)?);

    let faces = d.is_integral() && e.is_integral() && f.is_integral();
    let classification = match (faces, g.is_integral()) {
        (true, true) => BoxClass::Perfect,
        (true, false) => BoxClass::EulerBrick,
        _ if [d, e, f, g].iter().any(Diagonal::is_integral) => BoxClass::Partial,
        _ => BoxClass::None,
    };
    Ok(BoxReport {
        a,
        b,
        c,
        d,
        e,
        f,
        g,
        classification,
    })
}

/// Everything the oracle learned about one side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SideReport {
    pub side: u64,
    /// Every `b` with `a^2 + b^2` a perfect square, ascending.
    pub legs: Vec<u128>,
    /// Leg pairs `b = c` not examined; `f^2 = 2c^2` has no solution.
    pub equal_leg_pairs_skipped: u64,
    /// Boxes classified [`BoxClass::EulerBrick`] or [`BoxClass::Perfect`].
    pub boxes: Vec<BoxReport>,
}

impl SideReport {
    pub fn perfect(&self) -> impl Iterator<Item = &BoxReport> {
        self.boxes
            .iter()
            .filter(|r| r.classification == BoxClass::Perfect)
    }
}

/// Exhaustive search over all boxes with side `a`.
///
/// Any box with integer `d` and `e` draws both `b` and `c` from the leg set
/// of `a`, so the result contains every Euler brick and every perfect box
/// having `a` as a side.
pub fn search_side(a: u64) -> Result<SideReport> {
    let legs: Vec<u128> = legs_of_side(a)?.into_iter().map(|l| l.leg).collect();
    let squares = legs
        .iter()
        .map(|&b| arith::square(b, "leg square"))
        .collect::<Result<Vec<_>>>()?;

    let mut boxes = Vec::new();
    for i in 0..legs.len() {
        for j in i + 1..legs.len() {
            let f2 = arith::add(squares[i], squares[j], "face diagonal")?;
            if is_perfect_square(f2).is_some() {
                boxes.push(verify_box(a as u128, legs[i], legs[j])?);
            }
        }
    }
    Ok(SideReport {
        side: a,
        equal_leg_pairs_skipped: legs.len() as u64,
        legs,
        boxes,
    })
}

pub fn boxes_with_side(a: u64) -> Result<Vec<BoxReport>> {
    Ok(search_side(a)?.boxes)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScanFilter {
    #[default]
    All,
    /// Products of exactly two primes, including prime squares.
    SemiprimeOnly,
    PrimeOnly,
}

impl ScanFilter {
    pub fn selects(self, a: u64) -> Result<bool> {
        Ok(match self {
            ScanFilter::All => true,
            ScanFilter::SemiprimeOnly => matches!(
                classify_side(a)?,
                SideClass::Semiprime(..) | SideClass::PrimeSquare(_)
            ),
            ScanFilter::PrimeOnly => arith::is_prime(a),
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ScanFilter::All => "all",
            ScanFilter::SemiprimeOnly => "semiprime",
            ScanFilter::PrimeOnly => "prime",
        }
    }
}

/// One line of a checkpoint file. Counts are cumulative through
/// `completed_through`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckpointRecord {
    pub completed_through: u64,
    pub perfect: u64,
    pub bricks: u64,
}

#[derive(Clone, Debug)]
pub struct ScanOptions {
    /// Worker threads; 0 lets rayon decide.
    pub jobs: usize,
    /// Sides per checkpoint record.
    pub batch_size: u64,
    pub checkpoint: Option<PathBuf>,
    /// Start over even if the checkpoint has progress.
    pub ignore_checkpoint: bool,
    /// Stop after the batch containing this side, leaving the rest for a
    /// later resume.
    pub stop_after: Option<u64>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            jobs: 1,
            batch_size: 1000,
            checkpoint: None,
            ignore_checkpoint: false,
            stop_after: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRange {
    pub lo: u64,
    pub hi: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCursor {
    /// Largest side such that every side in `lo..=completed_through` is done.
    /// Equals `lo - 1` when nothing has completed.
    pub completed_through: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub range: ScanRange,
    pub filter: ScanFilter,
    /// Hits among the sides searched by this run.
    pub perfect_hits: Vec<BoxReport>,
    pub brick_hits: Vec<BoxReport>,
    /// Sides passing the filter and searched by this run.
    pub sides_processed: u64,
    pub sides_filtered_out: u64,
    pub equal_leg_pairs_skipped: u64,
    /// Totals over the whole completed prefix, including resumed progress.
    pub perfect_total: u64,
    pub brick_total: u64,
    /// Cursor found in the checkpoint when this run started.
    pub resumed_from: Option<u64>,
    pub checkpoint: ScanCursor,
    pub complete: bool,
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Reads the last valid record of a checkpoint file, validating every line.
pub fn read_checkpoint(path: &Path, lo: u64, hi: u64) -> Result<Option<CheckpointRecord>> {
    let file = match File::open(path) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(io_err(path)(e)),
    };
    let corrupt = |detail: String| Error::Checkpoint {
        path: path.to_path_buf(),
        detail,
    };

    let mut last: Option<CheckpointRecord> = None;
    for (idx, line) in BufReader::new(file).lines().enumerate() {
        let line = line.map_err(|e| corrupt(format!("line {}: {e}", idx + 1)))?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: CheckpointRecord =
            serde_json::from_str(&line).map_err(|e| corrupt(format!("line {}: {e}", idx + 1)))?;
        if rec.completed_through < lo || rec.completed_through > hi {
            return Err(corrupt(format!(
                "line {}: completed_through {} outside scan range {lo}..={hi}",
                idx + 1,
                rec.completed_through
            )));
        }
        if let Some(prev) = last {
            if rec.completed_through <= prev.completed_through
                || rec.perfect < prev.perfect
                || rec.bricks < prev.bricks
            {
                return Err(corrupt(format!(
                    "line {}: progress goes backwards",
                    idx + 1
                )));
            }
        }
        last = Some(rec);
    }
    Ok(last)
}

struct SideOutcome {
    selected: bool,
    report: Option<SideReport>,
}

fn process_side(a: u64, filter: ScanFilter) -> Result<SideOutcome> {
    if !filter.selects(a)? {
        return Ok(SideOutcome {
            selected: false,
            report: None,
        });
    }
    Ok(SideOutcome {
        selected: true,
        report: Some(search_side(a)?),
    })
}

/// Runs the oracle over every side in `lo..=hi` that passes `filter`.
///
/// Sides are processed in batches of `opts.batch_size`; within a batch they
/// run in parallel and results are merged in side order, so the report does
/// not depend on `opts.jobs`. After each batch one [`CheckpointRecord`] is
/// appended to the checkpoint file.
pub fn scan_range(lo: u64, hi: u64, filter: ScanFilter, opts: &ScanOptions) -> Result<ScanReport> {
    if lo == 0 {
        return Err(Error::Nonpositive("scan lower bound"));
    }
    if lo > hi {
        return Err(Error::InvalidRange { lo, hi });
    }
    let batch_size = opts.batch_size.max(1);

    let mut report = ScanReport {
        range: ScanRange { lo, hi },
        filter,
        perfect_hits: Vec::new(),
        brick_hits: Vec::new(),
        sides_processed: 0,
        sides_filtered_out: 0,
        equal_leg_pairs_skipped: 0,
        perfect_total: 0,
        brick_total: 0,
        resumed_from: None,
        checkpoint: ScanCursor {
            completed_through: lo - 1,
        },
        complete: false,
    };

    let mut writer = match &opts.checkpoint {
        None => None,
        Some(path) => {
            if !opts.ignore_checkpoint {
                if let Some(rec) = read_checkpoint(path, lo, hi)? {
                    report.resumed_from = Some(rec.completed_through);
                    report.checkpoint.completed_through = rec.completed_through;
                    report.perfect_total = rec.perfect;
                    report.brick_total = rec.bricks;
                }
            }
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).map_err(io_err(dir))?;
            }
            let file = OpenOptions::new()
                .create(true)
                .append(!opts.ignore_checkpoint)
                .write(true)
                .truncate(opts.ignore_checkpoint)
                .open(path)
                .map_err(io_err(path))?;
            Some((path.as_path(), file))
        }
    };

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("failed to build scan thread pool");

    let mut next = report.checkpoint.completed_through + 1;
    while next <= hi && report.checkpoint.completed_through < hi {
        let end = hi.min(next.saturating_add(batch_size - 1));
        let sides: Vec<u64> = (next..=end).collect();
        let outcomes = pool.install(|| {
            sides
                .par_iter()
                .map(|&a| process_side(a, filter))
                .collect::<Result<Vec<_>>>()
        })?;

        for outcome in outcomes {
            if !outcome.selected {
                report.sides_filtered_out += 1;
                continue;
            }
            report.sides_processed += 1;
            let side = outcome.report.expect("selected side has a report");
            report.equal_leg_pairs_skipped += side.equal_leg_pairs_skipped;
            for b in side.boxes {
                match b.classification {
                    BoxClass::Perfect => {
                        report.perfect_total += 1;
                        report.perfect_hits.push(b);
                    }
                    BoxClass::EulerBrick => {
                        report.brick_total += 1;
                        report.brick_hits.push(b);
                    }
                    _ => {}
                }
            }
        }
        report.checkpoint.completed_through = end;

        if let Some((path, file)) = writer.as_mut() {
            let rec = CheckpointRecord {
                completed_through: end,
                perfect: report.perfect_total,
                bricks: report.brick_total,
            };
            let line = serde_json::to_string(&rec).expect("checkpoint record serializes");
            writeln!(file, "{line}").map_err(io_err(path))?;
            file.flush().map_err(io_err(path))?;
        }

        if opts.stop_after.is_some_and(|s| end >= s) || end == u64::MAX {
            break;
        }
        next = end + 1;
    }
    report.complete = report.checkpoint.completed_through == hi;
    Ok(report)
}
