//! Direct search of every box with a given side, independent of the case
//! analysis.

use brickwright::search::{search_side, Diagonal};

fn show(d: Diagonal) -> String {
    match d {
        Diagonal::Value(v) => v.to_string(),
        Diagonal::Nonsquare(r) => format!("sqrt({r})"),
    }
}

fn main() -> brickwright::Result<()> {
    let a: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(44);
    let report = search_side(a)?;
    println!("side {a}: legs {:?}", report.legs);
    for b in &report.boxes {
        println!(
            "  ({}, {}, {})  d={} e={} f={} g={}  {:?}",
            b.a,
            b.b,
            b.c,
            show(b.d),
            show(b.e),
            show(b.f),
            show(b.g),
            b.classification
        );
    }
    Ok(())
}
