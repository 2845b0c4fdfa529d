//! Exact-integer tools for perfect cuboids whose odd side is a prime or a
//! product of two distinct primes.
//!
//! A perfect cuboid has integer sides `a, b, c`, integer face diagonals
//! `d, e, f` and an integer space diagonal `g`. Fixing `a`, every leg `b`
//! with `a^2 + b^2 = d^2` comes from a factor pair of `a^2`. The modules here
//! enumerate those pairs ([`pairs`]), replay the case analysis for sides
//! `pq` with explicit witnesses ([`cases`]), search boxes directly as an
//! independent check ([`search`]), and enumerate the case systems for sides
//! with more prime factors ([`almostprime`]).

pub mod almostprime;
pub mod arith;
pub mod cases;
pub mod cli;
pub mod error;
pub mod pairs;
pub mod search;

pub use cases::{verify_prime_side, verify_semiprime_theorem, ProofTrace, Verdict};
pub use error::{Error, Result};
pub use pairs::{divisor_pairs_of_square, legs_of_side, FactorPair, LegSolution};
pub use search::{
    scan_range, search_side, verify_box, BoxClass, BoxReport, ScanFilter, ScanOptions,
};
