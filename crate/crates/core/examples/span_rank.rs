//! The F polynomials of degree-n forests span the full space of degree-n
//! words starting with y; this prints the exact rank at each degree.
//!
//! Run with: cargo run --release --example span_rank

use rtmaps::forest::enumerate_forests;
use rtmaps::hopf::ForestSum;
use rtmaps::rtm::{f_poly, span_rank};

fn main() {
    for n in 1..=5 {
        let (rank, dimension) = span_rank(n);
        let forests = enumerate_forests(n).len();
        println!(
            "degree {}: {} forests span a rank-{} subspace of dimension {}",
            n, forests, rank, dimension
        );
    }

    // The spanning polynomials themselves, at degree 3.
    println!("\nF polynomials at degree 3:");
    for f in enumerate_forests(3) {
        println!("  F_{:<8} = {}", f.render(), f_poly(&ForestSum::from_forest(f.clone())).render());
    }
}
