//! Rooted forests: parsing, canonical form, grafting, and enumeration.
//!
//! Run with: cargo run --example forests

use rtmaps::forest::{enumerate_forests, Forest};

fn main() {
    // Forests are written as bracket strings, one [...] group per tree.
    // Parsing always canonicalizes: the tree order and the child order
    // inside each tree are sorted, so these two spellings are equal.
    let a = Forest::parse("[[]][]").unwrap();
    let b = Forest::parse("[][[]]").unwrap();
    assert_eq!(a, b);
    println!("canonical form of \"[[]][]\" is {:?}", a.render());

    // B+ grafts all roots of a forest onto one new root; b_minus undoes it.
    let grafted = a.b_plus();
    println!("B+({}) = {}", a, grafted);
    assert_eq!(grafted.b_minus(), a);

    // Enumeration by degree (number of vertices).
    for n in 0..=6 {
        let forests = enumerate_forests(n);
        println!("degree {}: {} forests", n, forests.len());
        if n <= 3 {
            for f in &forests {
                println!("  {:?}", f.render());
            }
        }
    }
}
