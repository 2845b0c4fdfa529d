//! Parallel range scan that stops partway, then resumes from its checkpoint.

use brickwright::search::{scan_range, ScanFilter, ScanOptions};

fn main() -> brickwright::Result<()> {
    let dir = std::env::temp_dir().join(format!("brickwright-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|source| brickwright::Error::Io {
        path: dir.clone(),
        source,
    })?;
    let path = dir.join("scan.jsonl");

    let mut opts = ScanOptions {
        jobs: 4,
        batch_size: 500,
        checkpoint: Some(path.clone()),
        stop_after: Some(2000),
        ..ScanOptions::default()
    };
    let first = scan_range(2, 5000, ScanFilter::All, &opts)?;
    println!(
        "first pass: through {}, {} bricks, complete: {}",
        first.checkpoint.completed_through, first.brick_total, first.complete
    );

    opts.stop_after = None;
    let second = scan_range(2, 5000, ScanFilter::All, &opts)?;
    println!(
        "resumed after {:?}: {} bricks in total, {} perfect",
        second.resumed_from, second.brick_total, second.perfect_total
    );
    for b in second.brick_hits.iter().take(5) {
        println!("  ({}, {}, {})", b.a, b.b, b.c);
    }
    print!("{}", std::fs::read_to_string(&path).unwrap_or_default());
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}
