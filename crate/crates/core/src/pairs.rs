//! Factor pairs of a square side and the legs they generate.
//!
//! For a fixed side `a`, every right triangle with leg `a` satisfies
//! `a^2 = (hyp - leg)(hyp + leg)`, so the other leg is read off from a factor
//! pair `(s, t)` of `a^2` with `s < t` and `s = t (mod 2)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, factorize, is_prime};
use crate::error::{Error, Result};

/// A factor pair stored with `s <= t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FactorPair {
    pub s: u128,
    pub t: u128,
}

impl FactorPair {
    /// Builds a pair in normalized orientation.
    pub fn new(x: u128, y: u128) -> Self {
        FactorPair {
            s: x.min(y),
            t: x.max(y),
        }
    }

    pub fn product(&self) -> Result<u128> {
        arith::mul(self.s, self.t, "factor pair product")
    }
}

impl fmt::Display for FactorPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.s, self.t)
    }
}

/// A pair whose orientation is significant, such as an intermediate
/// pointwise product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrientedPair(pub u128, pub u128);

impl OrientedPair {
    pub fn normalized(self) -> FactorPair {
        FactorPair::new(self.0, self.1)
    }
}

impl From<FactorPair> for OrientedPair {
    fn from(p: FactorPair) -> Self {
        OrientedPair(p.s, p.t)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LegSolution {
    pub leg: u128,
    pub hyp: u128,
}

impl LegSolution {
    /// The pair `(hyp - leg, hyp + leg)` this solution came from.
    pub fn source_pair(&self) -> Option<FactorPair> {
        Some(FactorPair::new(
            self.hyp - self.leg,
            self.hyp.checked_add(self.leg)?,
        ))
    }
}

/// Why a factor pair yields no positive integer leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LegRejection {
    /// `s = t`, so the leg would be zero.
    ZeroLeg,
    /// `s` and `t` differ in parity, so `(t - s) / 2` is not an integer.
    Parity,
}

pub fn classify_pair(pair: FactorPair) -> std::result::Result<LegSolution, LegRejection> {
    if pair.s == pair.t {
        return Err(LegRejection::ZeroLeg);
    }
    if !(pair.t - pair.s).is_multiple_of(2) {
        return Err(LegRejection::Parity);
    }
    let leg = (pair.t - pair.s) / 2;
    Ok(LegSolution {
        leg,
        hyp: pair.s + leg,
    })
}

pub fn leg_from_pair(pair: FactorPair) -> Option<LegSolution> {
    classify_pair(pair).ok()
}

/// All `(s, t)` with `s <= t` and `s * t = a^2`, ascending in `s`.
pub fn divisor_pairs_of_square(a: u64) -> Result<Vec<FactorPair>> {
    let square = arith::square(a as u128, "a^2")?;
    let divisors = factorize(a)?.divisors_of_square()?;
    Ok(divisors
        .into_iter()
        .take_while(|&d| d <= a as u128)
        .map(|d| FactorPair {
            s: d,
            t: square / d,
        })
        .collect())
}

/// Legs of every right triangle having `a` as a leg, ascending.
pub fn legs_of_side(a: u64) -> Result<Vec<LegSolution>> {
    let mut legs: Vec<_> = divisor_pairs_of_square(a)?
        .into_iter()
        .filter_map(leg_from_pair)
        .collect();
    legs.sort_unstable_by_key(|l| l.leg);
    Ok(legs)
}

pub(crate) fn check_distinct_primes(p: u64, q: u64) -> Result<()> {
    for x in [p, q] {
        if !is_prime(x) {
            return Err(Error::NotPrime(x));
        }
    }
    if p == q {
        return Err(Error::NotDistinct(p));
    }
    Ok(())
}

/// Symbolic identity of an entry in the factor-pair menu of `(pq)^2`,
/// named by its smaller component when `p < q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MenuEntry {
    /// `(1, p^2 q^2)`
    Unit,
    /// `(p, p q^2)`
    P,
    /// `(q, p^2 q)`
    Q,
    /// `(pq, pq)`
    Balanced,
    /// `(p^2, q^2)`
    Squares,
}

impl MenuEntry {
    pub const ALL: [MenuEntry; 5] = [
        MenuEntry::Unit,
        MenuEntry::P,
        MenuEntry::Q,
        MenuEntry::Balanced,
        MenuEntry::Squares,
    ];

    /// The factor pair for primes `p`, `q` in either order.
    pub fn pair(self, p: u64, q: u64) -> Result<FactorPair> {
        let (p, q) = (p as u128, q as u128);
        let what = "semiprime menu entry";
        let (x, y) = match self {
            MenuEntry::Unit => (1, arith::square(arith::mul(p, q, what)?, what)?),
            MenuEntry::P => (p, arith::mul(p, arith::square(q, what)?, what)?),
            MenuEntry::Q => (q, arith::mul(arith::square(p, what)?, q, what)?),
            MenuEntry::Balanced => {
                let pq = arith::mul(p, q, what)?;
                (pq, pq)
            }
            MenuEntry::Squares => (arith::square(p, what)?, arith::square(q, what)?),
        };
        Ok(FactorPair::new(x, y))
    }

    /// Image under exchanging the roles of `p` and `q`.
    pub fn swap_primes(self) -> Self {
        match self {
            MenuEntry::P => MenuEntry::Q,
            MenuEntry::Q => MenuEntry::P,
            other => other,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            MenuEntry::Unit => "(1,p^2q^2)",
            MenuEntry::P => "(p,pq^2)",
            MenuEntry::Q => "(q,p^2q)",
            MenuEntry::Balanced => "(pq,pq)",
            MenuEntry::Squares => "(p^2,q^2)",
        }
    }
}

/// The five factor pairs of `(pq)^2` for distinct primes, ascending in `s`.
pub fn semiprime_pair_menu(p: u64, q: u64) -> Result<Vec<FactorPair>> {
    check_distinct_primes(p, q)?;
    let mut menu = MenuEntry::ALL
        .iter()
        .map(|e| e.pair(p, q))
        .collect::<Result<Vec<_>>>()?;
    menu.sort_unstable();
    Ok(menu)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseKind {
    /// Both legs come from the mixed pairs `(p, pq^2)` and `(q, p^2 q)`.
    Symmetric,
    /// One leg comes from `(p^2, q^2)`.
    Asymmetric,
}

impl fmt::Display for CaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseKind::Symmetric => "Case1",
            CaseKind::Asymmetric => "Case2",
        })
    }
}

/// Which factor pairs house `(d - b, d + b)` and `(e - c, e + c)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LegAssignment {
    pub case: CaseKind,
    pub entry_b: MenuEntry,
    pub entry_c: MenuEntry,
    pub pair_b: FactorPair,
    pub pair_c: FactorPair,
}

/// Leg assignments for side `pq` surviving the pair filters, one per
/// symmetry class.
///
/// Every ordered selection `(B, C)` of two menu entries is filtered: equal
/// entries give `b = c`, `(pq, pq)` gives a zero leg, and `(1, p^2 q^2)`
/// forces `d - b = 1`, which makes `b` at least the face diagonal `f`. The
/// survivors are grouped into orbits under `B <-> C` and `p <-> q`. With
/// `p < q` each orbit has exactly one member whose `C` entry is
/// `(q, p^2 q)`; that member is the representative, so `c = q(p^2 - 1)/2`
/// in both cases.
pub fn admissible_leg_assignments(p: u64, q: u64) -> Result<Vec<LegAssignment>> {
    check_distinct_primes(p, q)?;
    let (p, q) = (p.min(q), p.max(q));

    let survivors: Vec<(MenuEntry, MenuEntry)> = MenuEntry::ALL
        .iter()
        .flat_map(|&b| MenuEntry::ALL.iter().map(move |&c| (b, c)))
        .filter(|&(b, c)| b != c)
        .filter(|&(b, c)| b != MenuEntry::Balanced && c != MenuEntry::Balanced)
        .filter(|&(b, c)| b != MenuEntry::Unit && c != MenuEntry::Unit)
        .collect();

    let orbit = |(b, c): (MenuEntry, MenuEntry)| {
        let mut members = vec![
            (b, c),
            (c, b),
            (b.swap_primes(), c.swap_primes()),
            (c.swap_primes(), b.swap_primes()),
        ];
        members.sort_unstable();
        members.dedup();
        members
    };

    let mut orbits: Vec<Vec<(MenuEntry, MenuEntry)>> = Vec::new();
    for sel in survivors {
        let o = orbit(sel);
        if !orbits.contains(&o) {
            orbits.push(o);
        }
    }

    let mut out = Vec::with_capacity(orbits.len());
    for o in orbits {
        let reps: Vec<_> = o.iter().filter(|(_, c)| *c == MenuEntry::Q).collect();
        debug_assert_eq!(reps.len(), 1, "orbit {o:?} has no unique representative");
        let &(b, c) = reps[0];
        let case = if b == MenuEntry::Squares || c == MenuEntry::Squares {
            CaseKind::Asymmetric
        } else {
            CaseKind::Symmetric
        };
        out.push(LegAssignment {
            case,
            entry_b: b,
            entry_c: c,
            pair_b: b.pair(p, q)?,
            pair_c: c.pair(p, q)?,
        });
    }
    out.sort_by_key(|a| a.case);
    Ok(out)
}
