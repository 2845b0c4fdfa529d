//! The divisor identity any perfect box must satisfy, evaluated for every
//! divisor triple of a small square.

use brickwright::arith::factorize;
use brickwright::cases::{general_case_sides, DivisorTriple};

fn main() -> brickwright::Result<()> {
    let a: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);
    let divisors = factorize(a)?.divisors_of_square()?;
    let (mut equal, mut degenerate, mut total) = (0, 0, 0);
    for &d_g in &divisors {
        for &d_b in &divisors {
            for &d_c in &divisors {
                let t = DivisorTriple::new(a, d_g, d_b, d_c)?;
                let s = general_case_sides(&t)?;
                total += 1;
                if s.lhs == s.rhs {
                    equal += 1;
                    let (b, c) = (t.twice_b()? / 2, t.twice_c()? / 2);
                    if b == 0 || c == 0 {
                        degenerate += 1;
                    }
                    if equal <= 5 {
                        println!("balanced: d_g={d_g} d_b={d_b} d_c={d_c} (b={b}, c={c})");
                    }
                }
            }
        }
    }
    println!("{equal} of {total} triples balance, {degenerate} of them with a zero leg");
    Ok(())
}
