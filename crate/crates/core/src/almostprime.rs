//! Factor-pair menus for sides with several distinct prime factors.
//!
//! A factor pair of `(p_1 ... p_k)^2` is determined by an exponent vector
//! `a_i in {0, 1, 2}`: the pair is `(prod p_i^a_i, prod p_i^(2 - a_i))`.
//! Menus for `k` primes are built by pointwise multiplication of the
//! one-prime menus, and positions with equal exponents collapse into a
//! single composite position.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{self, is_prime};
use crate::error::{Error, Result};
use crate::pairs::{FactorPair, OrientedPair};

/// `(x.0 * y.0, x.1 * y.1)`. The two pairs must not share a prime.
pub fn pointwise_multiply(x: OrientedPair, y: OrientedPair) -> Result<OrientedPair> {
    for xi in [x.0, x.1] {
        for yj in [y.0, y.1] {
            if xi.gcd(&yj) != 1 {
                return Err(Error::NonCoprime(x.0, x.1, y.0, y.1));
            }
        }
    }
    let what = "pointwise product";
    Ok(OrientedPair(
        arith::mul(x.0, y.0, what)?,
        arith::mul(x.1, y.1, what)?,
    ))
}

fn check_distinct_primes(primes: &[u64]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &p in primes {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !seen.insert(p) {
            return Err(Error::RepeatedPrime(p));
        }
    }
    Ok(())
}

/// The factor-pair menu of `(p_1 ... p_k)^2` with multiplicity.
///
/// The first prime contributes `{(1, p^2), (p, p)}` and each later prime
/// contributes both orientations `{(1, q^2), (q, q), (q^2, 1)}`, so the
/// result has `2 * 3^(k-1)` entries for `k >= 1`. Entries are normalized
/// and sorted.
pub fn pair_menu_k(primes: &[u64]) -> Result<Vec<FactorPair>> {
    check_distinct_primes(primes)?;
    let mut menu = vec![OrientedPair(1, 1)];
    for (idx, &p) in primes.iter().enumerate() {
        let p = p as u128;
        let p2 = arith::square(p, "prime square")?;
        let base: &[OrientedPair] = if idx == 0 {
            &[OrientedPair(1, p2), OrientedPair(p, p)]
        } else {
            &[OrientedPair(1, p2), OrientedPair(p, p), OrientedPair(p2, 1)]
        };
        menu = menu
            .iter()
            .flat_map(|&m| base.iter().map(move |&b| pointwise_multiply(m, b)))
            .collect::<Result<Vec<_>>>()?;
    }
    let mut out: Vec<FactorPair> = menu.into_iter().map(OrientedPair::normalized).collect();
    out.sort_unstable();
    Ok(out)
}

/// A factor pair of `(prod p_i)^2` as per-position exponents.
///
/// After [`reduce_case`] a position may hold a product of original primes;
/// `provenance[i]` lists the original primes merged into position `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairExponentVector {
    pub primes: Vec<u128>,
    pub provenance: Vec<Vec<u64>>,
    pub exponents: Vec<u8>,
}

impl PairExponentVector {
    pub fn new(primes: &[u64], exponents: &[u8]) -> Result<Self> {
        check_distinct_primes(primes)?;
        if primes.len() != exponents.len() {
            return Err(Error::OutOfRange {
                what: "exponent count",
                value: exponents.len() as u64,
                range: "must match the number of primes",
            });
        }
        if let Some(&e) = exponents.iter().find(|&&e| e > 2) {
            return Err(Error::OutOfRange {
                what: "exponent",
                value: e as u64,
                range: "0..=2",
            });
        }
        // The represented pair multiplies to (prod p)^2, which must fit.
        let radical = primes.iter().try_fold(1u128, |acc, &p| {
            arith::mul(acc, p as u128, "product of primes")
        })?;
        arith::square(radical, "square of product of primes")?;
        Ok(PairExponentVector {
            primes: primes.iter().map(|&p| p as u128).collect(),
            provenance: primes.iter().map(|&p| vec![p]).collect(),
            exponents: exponents.to_vec(),
        })
    }

    /// `(prod p_i^a_i, prod p_i^(2 - a_i))`
    pub fn pair(&self) -> OrientedPair {
        let mut x = 1u128;
        let mut y = 1u128;
        for (&p, &e) in self.primes.iter().zip(&self.exponents) {
            x *= p.pow(e as u32);
            y *= p.pow(2 - e as u32);
        }
        OrientedPair(x, y)
    }
}

/// Position pair `(i, j)`, `i < j`, with equal exponents: leftmost `i`,
/// then leftmost `j`.
fn first_equal_pair(exponents: &[u8]) -> Option<(usize, usize)> {
    (0..exponents.len())
        .flat_map(|i| (i + 1..exponents.len()).map(move |j| (i, j)))
        .find(|&(i, j)| exponents[i] == exponents[j])
}

/// Merges positions with equal exponents until all exponents differ.
///
/// The merged position keeps the left index and holds the product of the
/// two primes, so the represented pair is unchanged.
pub fn reduce_case(v: &PairExponentVector) -> PairExponentVector {
    let mut out = v.clone();
    while let Some((i, j)) = first_equal_pair(&out.exponents) {
        out.primes[i] *= out.primes[j];
        let moved = out.provenance.remove(j);
        out.provenance[i].extend(moved);
        out.primes.remove(j);
        out.exponents.remove(j);
    }
    out
}

/// Exponent pattern of one pair over abstract primes `p_1 .. p_w`.
pub type Pattern = Vec<u8>;

/// A pattern and its complement `2 - a` describe the same unordered pair;
/// this picks the lexicographically smaller one.
pub fn normalize_pattern(v: &[u8]) -> Pattern {
    let c: Pattern = v.iter().map(|&x| 2 - x).collect();
    std::cmp::min(v.to_vec(), c)
}

/// Renders a pattern as a symbolic pair over `p1, p2, ...`.
pub fn render_pattern(v: &[u8]) -> String {
    let side = |exp: &dyn Fn(u8) -> u8| {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter_map(|(i, &a)| match exp(a) {
                0 => None,
                1 => Some(format!("p{}", i + 1)),
                e => Some(format!("p{}^{e}", i + 1)),
            })
            .collect();
        if terms.is_empty() {
            "1".to_string()
        } else {
            terms.join("*")
        }
    };
    format!("({}, {})", side(&|a| a), side(&|a| 2 - a))
}

/// One unreduced system over the original `k` abstract primes, with the
/// columns that reduction merged.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceSystem {
    pub leg_b: Pattern,
    pub leg_c: Pattern,
    pub diagonal: Pattern,
    /// For each reduced position, the 1-based indices of the original
    /// abstract primes merged into it.
    pub merged: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagonalOption {
    /// Pattern of `(g - f, g + f)` relative to the class's leg patterns.
    pub pattern: Pattern,
    pub source: SourceSystem,
}

/// A symmetry class of leg assignments `(d -+ b)`, `(e -+ c)` with every
/// admissible space-diagonal pattern.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegClass {
    /// Positions after reduction.
    pub width: usize,
    pub leg_b: Pattern,
    pub leg_c: Pattern,
    pub diagonals: Vec<DiagonalOption>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSystems {
    pub k: usize,
    pub leg_classes: Vec<LegClass>,
    /// Number of distinct `(leg, leg, diagonal)` pattern triples.
    pub triple_count: usize,
    pub interpretation: Vec<String>,
}

fn is_constant(v: &[u8], x: u8) -> bool {
    v.iter().all(|&a| a == x)
}

fn leg_admissible(v: &[u8]) -> bool {
    // All 0 or all 2 is (1, N^2); all 1 is (N, N).
    !(is_constant(v, 0) || is_constant(v, 1) || is_constant(v, 2))
}

/// Merges columns equal across all three patterns, leftmost pair first.
fn reduce_system(b: &[u8], c: &[u8], g: &[u8]) -> (Pattern, Pattern, Pattern, Vec<Vec<usize>>) {
    let mut cols: Vec<(u8, u8, u8)> = (0..b.len()).map(|i| (b[i], c[i], g[i])).collect();
    let mut merged: Vec<Vec<usize>> = (1..=b.len()).map(|i| vec![i]).collect();
    while let Some((i, j)) = (0..cols.len())
        .flat_map(|i| (i + 1..cols.len()).map(move |j| (i, j)))
        .find(|&(i, j)| cols[i] == cols[j])
    {
        cols.remove(j);
        let moved = merged.remove(j);
        merged[i].extend(moved);
    }
    (
        normalize_pattern(&cols.iter().map(|c| c.0).collect::<Vec<_>>()),
        normalize_pattern(&cols.iter().map(|c| c.1).collect::<Vec<_>>()),
        normalize_pattern(&cols.iter().map(|c| c.2).collect::<Vec<_>>()),
        merged,
    )
}

fn permute(v: &[u8], perm: &[usize]) -> Pattern {
    normalize_pattern(&perm.iter().map(|&i| v[i]).collect::<Vec<_>>())
}

/// Canonical `(leg_b, leg_c, diagonal)` under column relabeling, leg swap
/// and per-pair complement: minimal legs first, then minimal diagonal among
/// the transforms attaining them.
fn canonical_triple(b: &[u8], c: &[u8], g: &[u8]) -> (Pattern, Pattern, Pattern) {
    let w = b.len();
    let mut best: Option<(Pattern, Pattern, Pattern)> = None;
    for perm in (0..w).permutations(w) {
        let (pb, pc, pg) = (permute(b, &perm), permute(c, &perm), permute(g, &perm));
        for cand in [(pb.clone(), pc.clone(), pg.clone()), (pc, pb, pg)] {
            if best.as_ref().is_none_or(|cur| cand < *cur) {
                best = Some(cand);
            }
        }
    }
    best.expect("at least one permutation")
}

/// Every leg-assignment class for sides with `k` distinct prime factors,
/// with the admissible space-diagonal patterns of each.
///
/// Legs may not be `(1, N^2)` or `(N, N)` and must differ; the space
/// diagonal pair may not be `(N, N)` or equal either leg pair. Systems are
/// reduced by merging primes whose exponents agree in all three pairs and
/// deduplicated under relabeling of primes and exchange of the legs.
pub fn canonical_case_systems(k: usize) -> Result<CaseSystems> {
    if !(1..=4).contains(&k) {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as u64,
            range: "1..=4",
        });
    }
    let patterns: Vec<Pattern> = std::iter::repeat_n([0u8, 1, 2], k)
        .multi_cartesian_product()
        .filter(|v| normalize_pattern(v) == *v)
        .collect();

    type Key = (usize, Pattern, Pattern);
    let mut classes: BTreeMap<Key, BTreeMap<Pattern, SourceSystem>> = BTreeMap::new();
    for b in patterns.iter().filter(|v| leg_admissible(v)) {
        for c in patterns.iter().filter(|v| leg_admissible(v) && *v != b) {
            for g in patterns
                .iter()
                .filter(|v| !is_constant(v, 1) && *v != b && *v != c)
            {
                let (rb, rc, rg, merged) = reduce_system(b, c, g);
                let (cb, cc, cg) = canonical_triple(&rb, &rc, &rg);
                classes
                    .entry((rb.len(), cb, cc))
                    .or_default()
                    .entry(cg)
                    .or_insert_with(|| SourceSystem {
                        leg_b: b.clone(),
                        leg_c: c.clone(),
                        diagonal: g.clone(),
                        merged,
                    });
            }
        }
    }

    let mut triple_count = 0;
    let leg_classes = classes
        .into_iter()
        .map(|((width, leg_b, leg_c), diags)| {
            triple_count += diags.len();
            LegClass {
                width,
                leg_b,
                leg_c,
                diagonals: diags
                    .into_iter()
                    .map(|(pattern, source)| DiagonalOption { pattern, source })
                    .collect(),
            }
        })
        .collect();

    Ok(CaseSystems {
        k,
        leg_classes,
        triple_count,
        interpretation: vec![
            "space-diagonal pattern excluded when equal to either leg pattern or all ones, by analogy with the two-prime case".to_string(),
            "primes merged only when their exponents agree in all three pairs".to_string(),
        ],
    })
}
