use std::path::PathBuf;

use thiserror::Error;

use crate::search::BoxReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("nonpositive input: {0} (positive integer required)")]
    Nonpositive(&'static str),

    #[error("arithmetic overflow while computing {0}: exceeds supported 128-bit width")]
    Overflow(&'static str),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("not semiprime-distinct: p = q = {0}")]
    NotDistinct(u64),

    #[error("outside theorem scope: {0}")]
    OutsideScope(String),

    #[error("{divisor} is not a divisor of a^2 = {square}")]
    NotDivisor { divisor: u128, square: u128 },

    #[error("repeated prime {0} in prime list")]
    RepeatedPrime(u64),

    #[error("non-coprime menus: ({0}, {1}) and ({2}, {3}) share a prime factor")]
    NonCoprime(u128, u128, u128, u128),

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: u64,
        range: &'static str,
    },

    #[error("empty range: lo = {lo} > hi = {hi}")]
    InvalidRange { lo: u64, hi: u64 },

    #[error(
        "checkpoint {} is unusable ({detail}); delete it to restart the scan or rerun with --ignore-checkpoint",
        path.display()
    )]
    Checkpoint { path: PathBuf, detail: String },

    #[error("I/O error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A case branch produced a box that satisfies every diagonal equation.
    #[error("case branch {label} survived with a perfect box")]
    Survivor {
        label: String,
        report: Box<BoxReport>,
    },
}
