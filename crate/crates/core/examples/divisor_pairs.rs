//! Legs of a side from the factor pairs of its square.
//!
//! ```text
//! cargo run --example divisor_pairs -- 15
//! ```

use brickwright::pairs::{classify_pair, divisor_pairs_of_square, LegRejection};

fn main() -> brickwright::Result<()> {
    let a: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(15);
    println!("factor pairs (s, t) of {a}^2 = {}", a as u128 * a as u128);
    for pair in divisor_pairs_of_square(a)? {
        let pair_text = pair.to_string();
        match classify_pair(pair) {
            Ok(sol) => println!("  {pair_text:<16} b = {:<8} d = {}", sol.leg, sol.hyp),
            Err(LegRejection::ZeroLeg) => println!("  {pair_text:<16} zero leg"),
            Err(LegRejection::Parity) => println!("  {pair_text:<16} s and t differ in parity"),
        }
    }
    Ok(())
}
