//! Full elimination trace for a side `p * q`, with every witness rechecked.
//!
//! ```text
//! cargo run --example semiprime_trace -- 3 5
//! ```

use brickwright::cases::{verify_semiprime_theorem, Verdict};

fn main() -> brickwright::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse::<u64>().ok());
    let p = args.next().unwrap_or(3);
    let q = args.next().unwrap_or(5);

    let trace = verify_semiprime_theorem(p, q)?;
    println!("side {} = {} * {}", trace.side(), trace.p, trace.q);
    for a in &trace.assignments {
        println!("  {}: legs from {} and {}", a.case, a.pair_b, a.pair_c);
    }
    for b in &trace.branches {
        let ws: Vec<String> = b
            .witness_values
            .iter()
            .map(|w| format!("{}={}", w.name, w.value))
            .collect();
        println!(
            "  {:<34} {:?} [{}]",
            b.branch_label,
            b.reason,
            ws.join(", ")
        );
        assert!(b.recheck());
    }
    for n in &trace.notes {
        println!("  note: {n}");
    }
    match trace.verdict {
        Verdict::AllEliminated => println!("{} branches, none survive", trace.branches.len()),
        Verdict::CounterexampleFound(b) => println!("counterexample: {b:?}"),
    }
    Ok(())
}
