//! Exact integer primitives: checked 128-bit arithmetic, perfect-square
//! testing, primality, factorization and side classification.
//!
//! Nothing in this crate touches floating point. Every product that can
//! outgrow its type goes through the checked helpers here and surfaces as
//! [`Error::Overflow`] instead of wrapping.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a * b`, or an overflow error naming `what` was being computed.
#[inline]
pub fn mul(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

#[inline]
pub fn add(a: u128, b: u128, what: &'static str) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

#[inline]
pub fn square(a: u128, what: &'static str) -> Result<u128> {
    mul(a, a, what)
}

#[inline]
pub fn imul(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

#[inline]
pub fn iadd(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

#[inline]
pub fn isub(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::Overflow(what))
}

/// Converts an unsigned quantity to a signed witness value.
#[inline]
pub fn signed(a: u128, what: &'static str) -> Result<i128> {
    i128::try_from(a).map_err(|_| Error::Overflow(what))
}

/// Returns `r` with `r * r == n`, if such an `r` exists.
pub fn is_perfect_square(n: u128) -> Option<u128> {
    // Quadratic residues mod 16 are {0, 1, 4, 9}.
    if (0x0213u16 >> (n & 15)) & 1 == 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

/// Deterministic primality for the whole `u64` range.
///
/// Small inputs go through trial division; everything else uses
/// Miller-Rabin with the first twelve prime bases, which has no
/// pseudoprimes below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in SMALL {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }

    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Prime factorization as `(prime, exponent)` entries, primes ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Number of distinct primes.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    /// Multiplies the factorization back out.
    pub fn value(&self) -> Result<u128> {
        let mut acc = 1u128;
        for &(p, e) in &self.factors {
            for _ in 0..e {
                acc = mul(acc, p as u128, "factorization product")?;
            }
        }
        Ok(acc)
    }

    /// Every divisor of `n^2`, ascending.
    pub fn divisors_of_square(&self) -> Result<Vec<u128>> {
        let mut divisors = vec![1u128];
        for &(p, e) in &self.factors {
            let mut next = Vec::with_capacity(divisors.len() * (2 * e as usize + 1));
            for &d in &divisors {
                let mut pk = d;
                next.push(pk);
                for _ in 0..2 * e {
                    pk = mul(pk, p as u128, "divisor of a^2")?;
                    next.push(pk);
                }
            }
            divisors = next;
        }
        divisors.sort_unstable();
        Ok(divisors)
    }
}

/// Complete factorization by trial division.
///
/// Once the remaining cofactor is prime the loop stops early, so inputs with
/// one large prime factor stay cheap.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Nonpositive("factorize"));
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut push = |rest: &mut u64, p: u64| {
        let mut e = 0;
        while (*rest).is_multiple_of(p) {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            factors.push((p, e));
        }
    };
    push(&mut rest, 2);
    push(&mut rest, 3);
    let mut p = 5u64;
    let mut cofactor_tested = false;
    while rest > 1 {
        if p.checked_mul(p).is_none_or(|pp| pp > rest) {
            let r = rest;
            push(&mut rest, r);
            break;
        }
        if !cofactor_tested {
            if is_prime(rest) {
                let r = rest;
                push(&mut rest, r);
                break;
            }
            cofactor_tested = true;
        }
        let before = rest;
        push(&mut rest, p);
        push(&mut rest, p + 2);
        cofactor_tested &= rest == before;
        p += 6;
    }
    Ok(Factorization { factors })
}

/// Shape of a side length by its prime factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SideClass {
    Unit,
    Prime(u64),
    /// Two distinct primes, `p < q`.
    Semiprime(u64, u64),
    PrimeSquare(u64),
    Composite(Factorization),
}

pub fn classify_side(n: u64) -> Result<SideClass> {
    let f = factorize(n)?;
    Ok(match f.factors() {
        [] => SideClass::Unit,
        [(p, 1)] => SideClass::Prime(*p),
        [(p, 2)] => SideClass::PrimeSquare(*p),
        [(p, 1), (q, 1)] => SideClass::Semiprime(*p, *q),
        _ => SideClass::Composite(f),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn naive_sqrt(n: u128) -> Option<u128> {
        (0..=n).find(|r| r * r == n)
    }

    fn naive_is_prime(n: u64) -> bool {
        n >= 2
            && (2..n)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(is_perfect_square(0), Some(0));
        assert_eq!(is_perfect_square(15625), Some(125));
        assert_eq!(is_perfect_square(1696), None);
        assert_eq!(is_perfect_square(u128::MAX), None);
        let big = (u64::MAX as u128) * (u64::MAX as u128);
        assert_eq!(is_perfect_square(big), Some(u64::MAX as u128));
        assert_eq!(is_perfect_square(big - 1), None);
    }

    #[test]
    fn perfect_square_matches_naive_loop() {
        // The naive loop is quadratic over the whole range, so step through
        // squares incrementally instead of rescanning from zero.
        let mut r = 0u128;
        for n in 0..=1_000_000u128 {
            while (r + 1) * (r + 1) <= n {
                r += 1;
            }
            let expected = (r * r == n).then_some(r);
            assert_eq!(is_perfect_square(n), expected, "n = {n}");
        }
        for n in [0u128, 1, 2, 3, 4, 99, 100, 101, 144] {
            assert_eq!(is_perfect_square(n), naive_sqrt(n));
        }
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_empty());
        assert_eq!(factorize(15).unwrap().factors(), &[(3, 1), (5, 1)]);
        assert_eq!(factorize(44).unwrap().factors(), &[(2, 2), (11, 1)]);
        assert!(matches!(factorize(0), Err(Error::Nonpositive(_))));
    }

    #[test]
    fn factorize_reconstructs_up_to_1e5() {
        for n in 1..=100_000u64 {
            let f = factorize(n).unwrap();
            assert_eq!(f.value().unwrap(), n as u128);
            let ps: Vec<u64> = f.primes().collect();
            assert!(ps.windows(2).all(|w| w[0] < w[1]));
            assert!(ps.iter().all(|&p| is_prime(p)));
            assert!(f.factors().iter().all(|&(_, e)| e >= 1));
        }
    }

    #[test]
    fn factorize_large_prime_cofactor() {
        let p = 18_446_744_073_709_551_557u64; // largest prime below 2^64
        assert_eq!(factorize(p).unwrap().factors(), &[(p, 1)]);
        let q = 4_294_967_291u64; // largest prime below 2^32
        assert_eq!(factorize(2 * q).unwrap().factors(), &[(2, 1), (q, 1)]);
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..50_000u64 {
            assert_eq!(is_prime(n), naive_is_prime(n), "n = {n}");
        }
        // Strong pseudoprimes to several small bases.
        for n in [
            2047u64,
            1_373_653,
            25_326_001,
            3_215_031_751,
            3_825_123_056_546_413_051,
        ] {
            assert!(!is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_side(15).unwrap(), SideClass::Semiprime(3, 5));
        assert_eq!(classify_side(9).unwrap(), SideClass::PrimeSquare(3));
        assert!(matches!(
            classify_side(44).unwrap(),
            SideClass::Composite(_)
        ));
        assert_eq!(classify_side(1).unwrap(), SideClass::Unit);
        assert_eq!(classify_side(97).unwrap(), SideClass::Prime(97));
    }

    #[test]
    fn classify_all_semiprimes_below_1e6() {
        let primes: Vec<u64> = (2..500_000).filter(|&n| is_prime(n)).collect();
        for (i, &p) in primes.iter().enumerate() {
            if p * p > 1_000_000 {
                break;
            }
            for &q in &primes[i + 1..] {
                if p * q > 1_000_000 {
                    break;
                }
                assert_eq!(classify_side(p * q).unwrap(), SideClass::Semiprime(p, q));
            }
        }
    }

    proptest! {
        #[test]
        fn perfect_square_of_any_root(r in 0u128..=u64::MAX as u128) {
            prop_assert_eq!(is_perfect_square(r * r), Some(r));
            if r > 0 {
                prop_assert_eq!(is_perfect_square(r * r + 1), None);
                prop_assert_eq!(is_perfect_square(r * r - 1), if r == 1 { Some(0) } else { None });
            }
        }

        #[test]
        fn factorization_round_trips(n in 1u64..=u32::MAX as u64 * 64) {
            prop_assert_eq!(factorize(n).unwrap().value().unwrap(), n as u128);
        }
    }
}
