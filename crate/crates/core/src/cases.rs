//! Case elimination for boxes whose side is a product of two distinct primes.
//!
//! Every branch of the case analysis is evaluated numerically with exact
//! integers and recorded as a [`BranchElimination`] carrying enough witness
//! values to recheck the elimination without rerunning the engine.
//!
//! Legs are handled in doubled form (`2b`, `2c`) so that mixed-parity pairs
//! still give integer identities; a half-integer leg is reported as a
//! [`EliminationReason::ParityFailure`] branch.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::arith::{self, iadd, imul, is_perfect_square, isub, signed};
use crate::error::{Error, Result};
use crate::pairs::{
    admissible_leg_assignments, check_distinct_primes, classify_pair, divisor_pairs_of_square,
    FactorPair, LegAssignment, LegRejection, MenuEntry,
};
use crate::search::{verify_box, BoxClass, BoxReport, Diagonal};

/// Divisors `d_g = g + f`, `d_b = d + b`, `d_c = e + c` of `side_a^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorTriple {
    pub d_g: u128,
    pub d_b: u128,
    pub d_c: u128,
    pub side_a: u64,
}

impl DivisorTriple {
    pub fn new(side_a: u64, d_g: u128, d_b: u128, d_c: u128) -> Result<Self> {
        let t = DivisorTriple {
            d_g,
            d_b,
            d_c,
            side_a,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn square(&self) -> Result<u128> {
        arith::square(self.side_a as u128, "a^2")
    }

    fn validate(&self) -> Result<u128> {
        let square = self.square()?;
        for d in [self.d_g, self.d_b, self.d_c] {
            if d == 0 || square % d != 0 {
                return Err(Error::NotDivisor { divisor: d, square });
            }
        }
        Ok(square)
    }

    /// `2b = |d_b - a^2/d_b|`
    pub fn twice_b(&self) -> Result<u128> {
        Ok(twice_leg(self.validate()?, self.d_b))
    }

    /// `2c = |d_c - a^2/d_c|`
    pub fn twice_c(&self) -> Result<u128> {
        Ok(twice_leg(self.validate()?, self.d_c))
    }

    /// `2 g_cand = d_g + a^2/d_g`
    pub fn twice_g(&self) -> Result<u128> {
        let square = self.validate()?;
        arith::add(self.d_g, square / self.d_g, "2g")
    }
}

fn twice_leg(square: u128, d: u128) -> u128 {
    d.abs_diff(square / d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralCaseSides {
    /// `(a^2/d_g)^2 + 2a^2 + d_g^2`, equal to `4 g_cand^2`.
    pub lhs: u128,
    /// `(a^2/d_b)^2 + d_b^2 + (a^2/d_c)^2 + d_c^2`, equal to `4(a^2 + b^2 + c^2)`.
    pub rhs: u128,
}

/// Evaluates both sides of the divisor identity that any perfect box with
/// side `a` must satisfy for its `(d_g, d_b, d_c)`.
pub fn general_case_sides(triple: &DivisorTriple) -> Result<GeneralCaseSides> {
    let square = triple.validate()?;
    let what = "general case identity";
    let sq = |x: u128| arith::square(x, what);
    let co = |d: u128| square / d;

    let lhs = arith::add(
        arith::add(sq(co(triple.d_g))?, arith::mul(2, square, what)?, what)?,
        sq(triple.d_g)?,
        what,
    )?;
    let rhs = [
        sq(co(triple.d_b))?,
        sq(triple.d_b)?,
        sq(co(triple.d_c))?,
        sq(triple.d_c)?,
    ]
    .into_iter()
    .try_fold(0u128, |acc, x| arith::add(acc, x, what))?;
    Ok(GeneralCaseSides { lhs, rhs })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EliminationReason {
    /// `lhs != rhs`; witnesses `lhs`, `rhs`, and optionally a factorization
    /// `lhs - rhs = multiplier * polynomial`.
    NonzeroContradictionPolynomial,
    /// Witness `radicand` is not a perfect square.
    NotPerfectSquare,
    /// Witness pair `(s, t)` has `s = t`, forcing a zero leg or face diagonal.
    ZeroLeg,
    /// Witnesses `diagonal_sum` and `leg_sum` coincide: the hypotenuse of a
    /// right triangle would equal one of its legs.
    DiagonalEqualsLeg,
    /// Witness pair `(s, t)` has mixed parity, so `(t - s)/2` is fractional.
    ParityFailure,
    /// Witness pair has `s = d - b = 1`, which forces `b >= f`.
    LegExceedsFaceDiagonal,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub name: String,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchElimination {
    pub branch_label: String,
    pub witness_values: Vec<Witness>,
    pub reason: EliminationReason,
}

impl BranchElimination {
    fn new(
        label: impl Into<String>,
        reason: EliminationReason,
        witnesses: &[(&str, i128)],
    ) -> Self {
        BranchElimination {
            branch_label: label.into(),
            witness_values: witnesses
                .iter()
                .map(|&(n, v)| Witness {
                    name: n.to_string(),
                    value: v,
                })
                .collect(),
            reason,
        }
    }

    pub fn witness(&self, name: &str) -> Option<i128> {
        self.witness_values
            .iter()
            .find(|w| w.name == name)
            .map(|w| w.value)
    }

    /// Re-derives the elimination from the stored witnesses alone.
    pub fn recheck(&self) -> bool {
        let w = |n| self.witness(n);
        match self.reason {
            EliminationReason::NonzeroContradictionPolynomial => {
                let (Some(lhs), Some(rhs)) = (w("lhs"), w("rhs")) else {
                    return false;
                };
                if lhs == rhs {
                    return false;
                }
                match (w("polynomial"), w("multiplier")) {
                    (Some(poly), Some(m)) => {
                        poly != 0 && m.checked_mul(poly) == lhs.checked_sub(rhs)
                    }
                    (None, None) => true,
                    _ => false,
                }
            }
            EliminationReason::NotPerfectSquare => match w("radicand") {
                Some(r) if r >= 0 => is_perfect_square(r as u128).is_none(),
                _ => false,
            },
            EliminationReason::ZeroLeg => matches!((w("s"), w("t")), (Some(s), Some(t)) if s == t),
            EliminationReason::DiagonalEqualsLeg => {
                matches!((w("diagonal_sum"), w("leg_sum")), (Some(x), Some(y)) if x == y)
            }
            EliminationReason::ParityFailure => {
                matches!((w("s"), w("t")), (Some(s), Some(t)) if s.rem_euclid(2) != t.rem_euclid(2))
            }
            EliminationReason::LegExceedsFaceDiagonal => {
                matches!((w("s"), w("t")), (Some(1), Some(t)) if t > 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    AllEliminated,
    CounterexampleFound(BoxReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    /// The smaller prime, or 1 for a prime side.
    pub p: u64,
    pub q: u64,
    pub assignments: Vec<LegAssignment>,
    pub branches: Vec<BranchElimination>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl ProofTrace {
    pub fn side(&self) -> u128 {
        self.p as u128 * self.q as u128
    }

    pub fn all_eliminated(&self) -> bool {
        self.verdict == Verdict::AllEliminated
    }

    /// Labels are unique and every recorded elimination rechecks from its
    /// witnesses.
    pub fn recheck(&self) -> bool {
        let labels: BTreeSet<&str> = self
            .branches
            .iter()
            .map(|b| b.branch_label.as_str())
            .collect();
        labels.len() == self.branches.len()
            && !self.branches.is_empty()
            && self.branches.iter().all(BranchElimination::recheck)
    }
}

/// Exact `p^2`, `q^2` and friends for a pair of primes.
#[derive(Clone, Copy)]
struct Primes {
    p: i128,
    q: i128,
    p2: i128,
    q2: i128,
}

impl Primes {
    fn new(p: u64, q: u64) -> Result<Self> {
        let (p, q) = (p as i128, q as i128);
        Ok(Primes {
            p,
            q,
            p2: imul(p, p, "p^2")?,
            q2: imul(q, q, "q^2")?,
        })
    }
}

/// `(p^2 - 1)(q^2 - 1)`, the factor every symmetric-case branch reduces to.
pub fn case1_contradiction_value(p: u64, q: u64) -> Result<i128> {
    let x = Primes::new(p, q)?;
    imul(x.p2 - 1, x.q2 - 1, "(p^2-1)(q^2-1)")
}

/// `(p^2 - q^2)(p^2 - 1)`: the asymmetric case with `(g - f, g + f) = (p, pq^2)`.
pub fn mixed_pair_polynomial(p: u64, q: u64) -> Result<i128> {
    let x = Primes::new(p, q)?;
    imul(x.p2 - x.q2, x.p2 - 1, "(p^2-q^2)(p^2-1)")
}

/// `p^2(q^4 - q^2 - 1) + q^4 + q^2 - 1`: the asymmetric case with
/// `(g - f, g + f) = (1, p^2 q^2)`.
pub fn unit_pair_polynomial(p: u64, q: u64) -> Result<i128> {
    let x = Primes::new(p, q)?;
    let what = "p^2(q^4-q^2-1)+q^4+q^2-1";
    let q4 = imul(x.q2, x.q2, what)?;
    let inner = isub(isub(q4, x.q2, what)?, 1, what)?;
    let tail = isub(iadd(q4, x.q2, what)?, 1, what)?;
    iadd(imul(x.p2, inner, what)?, tail, what)
}

fn side_of(p: u64, q: u64) -> Result<u64> {
    p.checked_mul(q).ok_or(Error::Overflow("side pq"))
}

fn pair_witnesses(pair: FactorPair) -> Result<[(&'static str, i128); 2]> {
    Ok([
        ("s", signed(pair.s, "pair")?),
        ("t", signed(pair.t, "pair")?),
    ])
}

/// Records the branch for a `(g - f, g + f)` divisor `d_g` whose identity
/// sides are equal, rechecking the full box. Returns a surviving perfect
/// box if every diagonal is integral.
fn resolve_balanced_identity(
    label: &str,
    side_a: u64,
    twice_b: u128,
    twice_c: u128,
    out: &mut Vec<BranchElimination>,
) -> Result<Option<BoxReport>> {
    use EliminationReason::*;
    if !twice_b.is_multiple_of(2) || !twice_c.is_multiple_of(2) {
        let odd = if !twice_b.is_multiple_of(2) {
            twice_b
        } else {
            twice_c
        };
        out.push(BranchElimination::new(
            label,
            ParityFailure,
            &[("s", 0), ("t", signed(odd, "2b")?)],
        ));
        return Ok(None);
    }
    let (b, c) = (twice_b / 2, twice_c / 2);
    if b == 0 || c == 0 {
        out.push(BranchElimination::new(
            label,
            ZeroLeg,
            &[("s", 0), ("t", 0)],
        ));
        return Ok(None);
    }
    let report = verify_box(side_a as u128, b, c)?;
    if report.classification == BoxClass::Perfect {
        return Ok(Some(report));
    }
    let radicand = [report.d, report.e, report.f, report.g]
        .into_iter()
        .find_map(|d| match d {
            Diagonal::Nonsquare(r) => Some(r),
            Diagonal::Value(_) => None,
        })
        .expect("non-perfect box has a nonsquare diagonal");
    out.push(BranchElimination::new(
        label,
        NotPerfectSquare,
        &[("radicand", signed(radicand, "radicand")?)],
    ));
    Ok(None)
}

fn parity_branches(
    prefix: &str,
    pairs: [(&str, FactorPair); 2],
    out: &mut Vec<BranchElimination>,
) -> Result<()> {
    for (name, pair) in pairs {
        if classify_pair(pair) == Err(LegRejection::Parity) {
            out.push(BranchElimination::new(
                format!("{prefix}/parity{name}"),
                EliminationReason::ParityFailure,
                &pair_witnesses(pair)?,
            ));
        }
    }
    Ok(())
}

fn case1_into(p: u64, q: u64, out: &mut Vec<BranchElimination>) -> Result<Option<BoxReport>> {
    use EliminationReason::*;
    check_distinct_primes(p, q)?;
    let x = Primes::new(p, q)?;
    let a = side_of(p, q)?;
    let pair_b = MenuEntry::P.pair(p, q)?;
    let pair_c = MenuEntry::Q.pair(p, q)?;
    // (d - b, d + b) = (p, pq^2), (e - c, e + c) = (q, p^2 q)
    let d_b = pair_b.t;
    let d_c = pair_c.t;
    let what = "symmetric case";
    let twice_b = imul(x.p, x.q2 - 1, what)? as u128;
    let twice_c = imul(x.q, x.p2 - 1, what)? as u128;
    parity_branches("Case1", [("(d-b,d+b)", pair_b), ("(e-c,e+c)", pair_c)], out)?;

    let poly = case1_contradiction_value(p, q)?;
    let p2q2 = imul(x.p2, x.q2, what)?;
    let candidates: [(&str, i128, i128); 6] = [
        ("p^2q^2", p2q2, iadd(p2q2, 1, what)?),
        ("pq^2", imul(x.p, x.q2, what)?, 0),
        ("pq", imul(x.p, x.q, what)?, 0),
        ("p^2q", imul(x.p2, x.q, what)?, 0),
        ("p^2", x.p2, -iadd(x.p2, x.q2, what)?),
        ("q^2", x.q2, -iadd(x.p2, x.q2, what)?),
    ];
    for (name, d_g_signed, multiplier) in candidates {
        let label = format!("Case1/d_g={name}");
        let d_g = d_g_signed as u128;
        if d_g == d_b || d_g == d_c {
            let leg_sum = if d_g == d_b { d_b } else { d_c };
            out.push(BranchElimination::new(
                label,
                DiagonalEqualsLeg,
                &[
                    ("diagonal_sum", d_g_signed),
                    ("leg_sum", signed(leg_sum, what)?),
                ],
            ));
            continue;
        }
        if d_g == a as u128 {
            // g - f = g + f forces f = 0.
            out.push(BranchElimination::new(
                label,
                ZeroLeg,
                &[("s", d_g_signed), ("t", d_g_signed)],
            ));
            continue;
        }
        let sides = general_case_sides(&DivisorTriple::new(a, d_g, d_b, d_c)?)?;
        if sides.lhs == sides.rhs {
            if let Some(found) = resolve_balanced_identity(&label, a, twice_b, twice_c, out)? {
                return Ok(Some(found));
            }
            continue;
        }
        out.push(BranchElimination::new(
            label,
            NonzeroContradictionPolynomial,
            &[
                ("d_g", d_g as i128),
                ("lhs", signed(sides.lhs, "lhs")?),
                ("rhs", signed(sides.rhs, "rhs")?),
                ("polynomial", poly),
                ("multiplier", multiplier),
            ],
        ));
    }
    Ok(None)
}

fn case2_into(
    prefix: &str,
    p: u64,
    q: u64,
    out: &mut Vec<BranchElimination>,
) -> Result<Option<BoxReport>> {
    use EliminationReason::*;
    check_distinct_primes(p, q)?;
    let x = Primes::new(p, q)?;
    let a = side_of(p, q)?;
    // (d - b, d + b) = (min(p^2, q^2), max(p^2, q^2)), (e - c, e + c) = (q, p^2 q)
    let pair_b = MenuEntry::Squares.pair(p, q)?;
    let pair_c = MenuEntry::Q.pair(p, q)?;
    let d_b = pair_b.t;
    let d_c = pair_c.t;
    let twice_b = (x.p2 - x.q2).unsigned_abs();
    let twice_c = imul(x.q, x.p2 - 1, "asymmetric case")? as u128;
    parity_branches(prefix, [("(d-b,d+b)", pair_b), ("(e-c,e+c)", pair_c)], out)?;

    for entry in MenuEntry::ALL {
        let label = format!("{prefix}/(g-f,g+f)={}", entry.symbol());
        let pair = entry.pair(p, q)?;
        match entry {
            MenuEntry::Squares | MenuEntry::Q => {
                let leg_sum = if entry == MenuEntry::Squares {
                    d_b
                } else {
                    d_c
                };
                out.push(BranchElimination::new(
                    label,
                    DiagonalEqualsLeg,
                    &[
                        ("diagonal_sum", signed(pair.t, "d_g")?),
                        ("leg_sum", signed(leg_sum, "d")?),
                    ],
                ));
            }
            MenuEntry::Balanced => {
                out.push(BranchElimination::new(
                    label,
                    ZeroLeg,
                    &pair_witnesses(pair)?,
                ));
            }
            MenuEntry::P | MenuEntry::Unit => {
                let d_g = pair.t;
                let sides = general_case_sides(&DivisorTriple::new(a, d_g, d_b, d_c)?)?;
                if sides.lhs == sides.rhs {
                    if let Some(found) =
                        resolve_balanced_identity(&label, a, twice_b, twice_c, out)?
                    {
                        return Ok(Some(found));
                    }
                    continue;
                }
                let (poly, multiplier) = if entry == MenuEntry::P {
                    (mixed_pair_polynomial(p, q)?, -iadd(x.q2, 1, "q^2+1")?)
                } else {
                    (unit_pair_polynomial(p, q)?, x.p2 - 1)
                };
                out.push(BranchElimination::new(
                    label,
                    NonzeroContradictionPolynomial,
                    &[
                        ("d_g", signed(d_g, "d_g")?),
                        ("lhs", signed(sides.lhs, "lhs")?),
                        ("rhs", signed(sides.rhs, "rhs")?),
                        ("polynomial", poly),
                        ("multiplier", multiplier),
                    ],
                ));
            }
        }
    }
    Ok(None)
}

fn survivor(label: &str, report: BoxReport) -> Error {
    Error::Survivor {
        label: label.to_string(),
        report: Box::new(report),
    }
}

/// Branches of the symmetric case `(d - b, d + b) = (p, pq^2)`,
/// `(e - c, e + c) = (q, p^2 q)`, one per candidate `d_g`.
pub fn case1_solve(p: u64, q: u64) -> Result<Vec<BranchElimination>> {
    let mut out = Vec::new();
    match case1_into(p, q, &mut out)? {
        Some(found) => Err(survivor("Case1", found)),
        None => Ok(out),
    }
}

/// Branches of the asymmetric case `(d - b, d + b) = (min(p^2,q^2), max(p^2,q^2))`,
/// `(e - c, e + c) = (q, p^2 q)`, one per candidate `(g - f, g + f)`.
///
/// The primes may be given in either order; the two orders cover the two
/// assignments related by exchanging `p` and `q`.
pub fn case2_solve(p: u64, q: u64) -> Result<Vec<BranchElimination>> {
    let mut out = Vec::new();
    match case2_into("Case2", p, q, &mut out)? {
        Some(found) => Err(survivor("Case2", found)),
        None => Ok(out),
    }
}

fn leg_menu_branches(p: u64, q: u64, out: &mut Vec<BranchElimination>) -> Result<()> {
    use EliminationReason::*;
    for entry in MenuEntry::ALL {
        let pair = entry.pair(p, q)?;
        let label = format!("Legs/{}", entry.symbol());
        match (entry, classify_pair(pair)) {
            (_, Err(LegRejection::ZeroLeg)) => {
                out.push(BranchElimination::new(
                    label,
                    ZeroLeg,
                    &pair_witnesses(pair)?,
                ));
            }
            (_, Err(LegRejection::Parity)) => {
                out.push(BranchElimination::new(
                    label,
                    ParityFailure,
                    &pair_witnesses(pair)?,
                ));
            }
            (MenuEntry::Unit, Ok(_)) => {
                out.push(BranchElimination::new(
                    label,
                    LegExceedsFaceDiagonal,
                    &pair_witnesses(pair)?,
                ));
            }
            (_, Ok(sol)) => {
                // The same pair for both legs forces b = c and f^2 = 2b^2.
                let radicand = arith::mul(2, arith::square(sol.leg, "2b^2")?, "2b^2")?;
                out.push(BranchElimination::new(
                    format!("Legs/b=c{}", entry.symbol()),
                    NotPerfectSquare,
                    &[
                        ("leg", signed(sol.leg, "leg")?),
                        ("radicand", signed(radicand, "2b^2")?),
                    ],
                ));
            }
        }
    }
    Ok(())
}

/// Runs the full case analysis for side `pq` and assembles a proof trace.
///
/// A surviving branch is confirmed against [`verify_box`] and reported as
/// [`Verdict::CounterexampleFound`] rather than as an error.
pub fn verify_semiprime_theorem(p: u64, q: u64) -> Result<ProofTrace> {
    check_distinct_primes(p, q).map_err(|e| match e {
        Error::NotDistinct(x) => {
            Error::OutsideScope(format!("p = q = {x}; a prime square is not covered"))
        }
        Error::NotPrime(x) => Error::OutsideScope(format!("{x} is not prime")),
        other => other,
    })?;
    let (p, q) = (p.min(q), p.max(q));
    let assignments = admissible_leg_assignments(p, q)?;

    let mut branches = Vec::new();
    leg_menu_branches(p, q, &mut branches)?;
    let found = match case1_into(p, q, &mut branches)? {
        Some(found) => Some(found),
        None => match case2_into("Case2", p, q, &mut branches)? {
            Some(found) => Some(found),
            None => case2_into("Case2[p<->q]", q, p, &mut branches)?,
        },
    };

    let mut notes = Vec::new();
    if p == 2 {
        notes.push(
            "p = 2: mixed-parity pairs give half-integer legs and are recorded as parity failures"
                .to_string(),
        );
        notes.push(format!(
            "Case2[p<->q] evaluates p^2(q^4-q^2-1)+q^4+q^2-1 with q = 2: value {}",
            unit_pair_polynomial(q, p)?
        ));
    }
    let verdict = match found {
        Some(report) => {
            notes.push("FALSIFICATION CANDIDATE: a branch survived with a perfect box".to_string());
            Verdict::CounterexampleFound(report)
        }
        None => Verdict::AllEliminated,
    };
    Ok(ProofTrace {
        p,
        q,
        assignments,
        branches,
        verdict,
        notes,
    })
}

/// Prime sides: the menu `{(1, p^2), (p, p)}` admits no usable leg.
pub fn verify_prime_side(p: u64) -> Result<ProofTrace> {
    use EliminationReason::*;
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut branches = Vec::new();
    for pair in divisor_pairs_of_square(p)? {
        let label = if pair.s == 1 {
            "Legs/(1,p^2)"
        } else {
            "Legs/(p,p)"
        };
        let reason = match classify_pair(pair) {
            Err(LegRejection::ZeroLeg) => ZeroLeg,
            Err(LegRejection::Parity) => ParityFailure,
            Ok(_) => LegExceedsFaceDiagonal,
        };
        branches.push(BranchElimination::new(
            label,
            reason,
            &pair_witnesses(pair)?,
        ));
    }
    Ok(ProofTrace {
        p: 1,
        q: p,
        assignments: Vec::new(),
        branches,
        verdict: Verdict::AllEliminated,
        notes: vec!["prime side: p = 1 stands in for the absent second prime".to_string()],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use crate::search::boxes_with_side;

    fn labels(bs: &[BranchElimination]) -> Vec<&str> {
        bs.iter().map(|b| b.branch_label.as_str()).collect()
    }

    fn find<'a>(bs: &'a [BranchElimination], label: &str) -> &'a BranchElimination {
        bs.iter()
            .find(|b| b.branch_label == label)
            .unwrap_or_else(|| panic!("no branch {label} in {:?}", labels(bs)))
    }

    #[test]
    fn general_case_examples() {
        // a = 15: d_b = 25 gives b = 8, d_c = 45 gives c = 20, d_g = 15 gives g_cand = 15.
        let t = DivisorTriple::new(15, 15, 25, 45).unwrap();
        let s = general_case_sides(&t).unwrap();
        assert_eq!(s.rhs, 81 + 625 + 25 + 2025);
        assert_eq!(s.rhs, 4 * (225 + 8 * 8 + 20 * 20));
        assert_eq!(s.lhs, 225 + 450 + 225);
        assert_eq!(s.lhs, 4 * 15 * 15);

        let t = DivisorTriple::new(44, 1936, 242, 484).unwrap();
        assert_eq!(general_case_sides(&t).unwrap().rhs, 292_900);
        assert_eq!(292_900, 4 * (44 * 44 + 117 * 117 + 240 * 240));

        // (a, a) gives c = 0; the raw identity still evaluates.
        let t = DivisorTriple::new(15, 25, 25, 15).unwrap();
        assert_eq!(t.twice_c().unwrap(), 0);
        assert_eq!(general_case_sides(&t).unwrap().rhs, 81 + 625 + 225 + 225);
    }

    #[test]
    fn general_case_rejects_non_divisors() {
        assert!(matches!(
            DivisorTriple::new(15, 7, 25, 45),
            Err(Error::NotDivisor { divisor: 7, .. })
        ));
        let bogus = DivisorTriple {
            d_g: 15,
            d_b: 26,
            d_c: 45,
            side_a: 15,
        };
        assert!(matches!(
            general_case_sides(&bogus),
            Err(Error::NotDivisor { divisor: 26, .. })
        ));
        let zero = DivisorTriple {
            d_g: 0,
            d_b: 25,
            d_c: 45,
            side_a: 15,
        };
        assert!(general_case_sides(&zero).is_err());
    }

    #[test]
    fn case1_for_3_5() {
        let bs = case1_solve(3, 5).unwrap();
        assert_eq!(bs.len(), 6);
        let top = find(&bs, "Case1/d_g=p^2q^2");
        assert_eq!(
            top.reason,
            EliminationReason::NonzeroContradictionPolynomial
        );
        // g = (225 + 1)/2 = 113; b = 36, c = 20.
        assert_eq!(top.witness("lhs"), Some(4 * 113 * 113));
        assert_eq!(top.witness("lhs"), Some(51_076));
        assert_eq!(top.witness("rhs"), Some(4 * (225 + 36 * 36 + 20 * 20)));
        assert_eq!(top.witness("rhs"), Some(7_684));
        let nine = find(&bs, "Case1/d_g=p^2");
        assert_eq!(nine.witness("lhs"), Some(4 * 17 * 17));
        assert_eq!(nine.witness("lhs"), Some(1_156));
        assert_eq!(find(&bs, "Case1/d_g=pq").reason, EliminationReason::ZeroLeg);
        assert_eq!(
            find(&bs, "Case1/d_g=pq^2").reason,
            EliminationReason::DiagonalEqualsLeg
        );
        assert_eq!(
            find(&bs, "Case1/d_g=p^2q").reason,
            EliminationReason::DiagonalEqualsLeg
        );
        assert!(bs.iter().all(BranchElimination::recheck));
    }

    #[test]
    fn case1_for_3_7_eliminates_everything() {
        let bs = case1_solve(3, 7).unwrap();
        // b = 3*48/2 = 72, c = 7*8/2 = 28.
        let rhs = 4 * (441 + 72 * 72 + 28 * 28);
        for name in ["p^2q^2", "p^2", "q^2"] {
            let b = find(&bs, &format!("Case1/d_g={name}"));
            assert_eq!(b.witness("rhs"), Some(rhs));
            assert_ne!(b.witness("lhs"), Some(rhs));
        }
        assert!(bs.iter().all(BranchElimination::recheck));
    }

    #[test]
    fn case1_contradiction_values() {
        assert_eq!(case1_contradiction_value(3, 5).unwrap(), 192);
        assert_eq!(case1_contradiction_value(2, 3).unwrap(), 24);
        assert_eq!(case1_contradiction_value(1, 5).unwrap(), 0);
    }

    #[test]
    fn case2_for_3_5() {
        let bs = case2_solve(3, 5).unwrap();
        assert_eq!(bs.len(), 5);
        let mixed = find(&bs, "Case2/(g-f,g+f)=(p,pq^2)");
        assert_eq!(mixed.witness("polynomial"), Some((9 - 25) * (9 - 1)));
        assert_eq!(mixed.witness("polynomial"), Some(-128));
        // b = 8, c = 20
        assert_eq!(mixed.witness("rhs"), Some(4 * (225 + 64 + 400)));
        let unit = find(&bs, "Case2/(g-f,g+f)=(1,p^2q^2)");
        assert_eq!(
            unit.witness("polynomial"),
            Some(9 * (625 - 25 - 1) + 625 + 25 - 1)
        );
        assert_eq!(unit.witness("polynomial"), Some(6_040));
        assert!(bs.iter().all(BranchElimination::recheck));
    }

    #[test]
    fn case2_for_2_3() {
        let bs = case2_solve(2, 3).unwrap();
        let unit = find(&bs, "Case2/(g-f,g+f)=(1,p^2q^2)");
        assert_eq!(
            unit.witness("polynomial"),
            Some(4 * (81 - 9 - 1) + 81 + 9 - 1)
        );
        assert_eq!(unit.witness("polynomial"), Some(373));
        // (4, 9) and (3, 12) both have mixed parity.
        assert!(bs
            .iter()
            .any(|b| b.reason == EliminationReason::ParityFailure));
        assert!(bs.iter().all(BranchElimination::recheck));
    }

    #[test]
    fn solvers_reject_equal_or_composite_inputs() {
        assert!(case1_solve(5, 5).is_err());
        assert!(case2_solve(5, 5).is_err());
        assert!(case1_solve(4, 5).is_err());
        assert!(matches!(
            verify_semiprime_theorem(5, 5),
            Err(Error::OutsideScope(_))
        ));
        assert!(matches!(
            verify_semiprime_theorem(4, 6),
            Err(Error::OutsideScope(_))
        ));
    }

    #[test]
    fn theorem_traces() {
        for (p, q) in [(3, 5), (2, 3), (13, 17), (5, 3)] {
            let t = verify_semiprime_theorem(p, q).unwrap();
            assert!(t.all_eliminated(), "{p} {q}");
            assert_eq!(t.assignments.len(), 2);
            assert!(t.recheck());
            assert!(boxes_with_side(p * q)
                .unwrap()
                .iter()
                .all(|b| b.classification != BoxClass::Perfect));
        }
        let t = verify_semiprime_theorem(3, 5).unwrap();
        // 5 leg-menu branches, 6 symmetric, 5 + 5 asymmetric.
        assert_eq!(t.branches.len(), 21);
        assert!(t
            .branches
            .iter()
            .filter(|b| b.reason == EliminationReason::NonzeroContradictionPolynomial)
            .all(|b| b.witness("polynomial").unwrap() != 0));
    }

    #[test]
    fn theorem_trace_for_even_prime_records_swapped_positivity() {
        let t = verify_semiprime_theorem(2, 3).unwrap();
        let swapped = find(&t.branches, "Case2[p<->q]/(g-f,g+f)=(1,p^2q^2)");
        // Evaluated with the roles exchanged, i.e. at q = 2.
        assert_eq!(
            swapped.witness("polynomial"),
            Some(9 * (16 - 4 - 1) + 16 + 4 - 1)
        );
        assert!(t.notes.iter().any(|n| n.contains("q = 2")));
    }

    #[test]
    fn prime_side_traces() {
        let t = verify_prime_side(3).unwrap();
        assert!(t.all_eliminated());
        assert_eq!(
            t.branches[0].reason,
            EliminationReason::LegExceedsFaceDiagonal
        );
        assert_eq!(t.branches[0].witness("t"), Some(9));
        assert_eq!(t.branches[1].reason, EliminationReason::ZeroLeg);

        let t = verify_prime_side(2).unwrap();
        assert_eq!(t.branches[0].reason, EliminationReason::ParityFailure);
        assert_eq!(t.branches[1].reason, EliminationReason::ZeroLeg);
        assert!(t.recheck());

        let t = verify_prime_side(97).unwrap();
        assert!(t.all_eliminated() && t.recheck());
        assert!(boxes_with_side(97).unwrap().is_empty());

        assert!(matches!(verify_prime_side(91), Err(Error::NotPrime(91))));
        assert!(verify_prime_side(1).is_err());
    }

    #[test]
    fn recheck_catches_tampering() {
        let mut bs = case1_solve(3, 5).unwrap();
        for b in &mut bs {
            for w in &mut b.witness_values {
                if w.name == "rhs" || w.name == "diagonal_sum" || w.name == "t" {
                    w.value += 1;
                }
            }
        }
        assert!(bs.iter().any(|b| !b.recheck()));
        let bogus = BranchElimination::new(
            "x",
            EliminationReason::NotPerfectSquare,
            &[("radicand", 49)],
        );
        assert!(!bogus.recheck());
    }

    #[test]
    fn case1_polynomial_factorization_matches_witnesses() {
        let primes: Vec<u64> = (2..60).filter(|&n| is_prime(n)).collect();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                for b in case1_solve(p, q).unwrap() {
                    assert!(b.recheck(), "{p} {q} {}", b.branch_label);
                }
                for b in case2_solve(p, q)
                    .unwrap()
                    .into_iter()
                    .chain(case2_solve(q, p).unwrap())
                {
                    assert!(b.recheck(), "{p} {q} {}", b.branch_label);
                }
            }
        }
    }
}
