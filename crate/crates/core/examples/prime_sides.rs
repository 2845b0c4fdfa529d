//! Prime sides: the two-branch elimination for every prime up to a bound.

use brickwright::arith::is_prime;
use brickwright::cases::verify_prime_side;

fn main() -> brickwright::Result<()> {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1000);

    let trace = verify_prime_side(7)?;
    for b in &trace.branches {
        println!("7: {} -> {:?}", b.branch_label, b.reason);
    }

    let mut count = 0;
    for p in (2..=max).filter(|&n| is_prime(n)) {
        let t = verify_prime_side(p)?;
        assert!(t.all_eliminated() && t.recheck(), "prime side {p} survived");
        count += 1;
    }
    println!("{count} prime sides up to {max} eliminated");
    Ok(())
}
