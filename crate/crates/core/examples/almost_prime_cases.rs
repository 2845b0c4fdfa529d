//! Case systems for sides with k distinct primes, and the pair menu behind
//! them.

use brickwright::almostprime::{canonical_case_systems, pair_menu_k, render_pattern};

fn main() -> brickwright::Result<()> {
    let menu = pair_menu_k(&[3, 5, 7])?;
    println!("menu for 3*5*7: {} entries", menu.len());

    for k in 1..=3 {
        let systems = canonical_case_systems(k)?;
        println!(
            "k = {k}: {} leg classes, {} systems",
            systems.leg_classes.len(),
            systems.triple_count
        );
        for class in &systems.leg_classes {
            let diagonals: Vec<String> = class
                .diagonals
                .iter()
                .map(|d| render_pattern(&d.pattern))
                .collect();
            println!(
                "  {} / {}  with g-f, g+f in {{{}}}",
                render_pattern(&class.leg_b),
                render_pattern(&class.leg_c),
                diagonals.join(", ")
            );
        }
    }
    Ok(())
}
