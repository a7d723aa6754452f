//! Mechanically re-verify algebraic identities over bounded exhaustive
//! grids and print the resulting reports.
//!
//! Run with: cargo run --release --example verify_identities

use rtmaps::verify::{verify_identity, Bounds, IdentityName};

fn main() {
    // A few fast sweeps at custom bounds.
    let selection = [
        (IdentityName::Coassoc, Bounds::new(5, 0)),
        (IdentityName::Cor, Bounds::new(5, 0)),
        (IdentityName::Thm1, Bounds::new(3, 3)),
        (IdentityName::PropFg0, Bounds::new(4, 0)),
        (IdentityName::Eq1, Bounds::new(0, 6)),
    ];
    for (name, bounds) in selection {
        let report = verify_identity(name, bounds);
        println!(
            "{:<12} {:<4} checked {:>5} cases in {:>5} ms",
            report.identity,
            if report.passed() { "pass" } else { "FAIL" },
            report.checked,
            report.millis
        );
        if let Some(ce) = &report.counterexample {
            println!("  counterexample: {}", ce);
        }
    }

    // Every identity also carries default bounds; `check all` on the CLI
    // runs the whole list:
    println!("\navailable identities:");
    for name in IdentityName::all() {
        let b = name.default_bounds();
        println!(
            "  {:<14} forests ≤ {}, words ≤ {}",
            name.name(),
            b.max_forest_degree,
            b.max_word_length
        );
    }
}
