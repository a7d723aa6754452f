//! The Hopf algebra structure on forests: coproduct, counit, antipode.
//!
//! Run with: cargo run --example hopf_structure

use rtmaps::forest::Forest;
use rtmaps::hopf::{antipode, coproduct, ForestSum};

fn main() {
    // The ladder with two vertices.
    let ladder2 = ForestSum::from_forest(Forest::parse("[[]]").unwrap());

    // Δ([[]]) = 1 ⊗ [[]] + [] ⊗ [] + [[]] ⊗ 1
    println!("coproduct of [[]]:");
    for ((left, right), c) in coproduct(&ladder2).terms() {
        println!("  {} · ({} ⊗ {})", rtmaps::rational::render_q(c),
                 display(left), display(right));
    }

    // The antipode flips signs and re-expands into forest products.
    println!("antipode of [[]]     = {}", antipode(&ladder2).render());
    let cherry3 = ForestSum::from_forest(Forest::parse("[[][]]").unwrap());
    println!("antipode of [[][]]   = {}", antipode(&cherry3).render());

    // Antipode axiom: Σ S(f') f'' = counit(f) · 1.
    let f = ForestSum::from_forest(Forest::parse("[[]][]").unwrap());
    let mut folded = ForestSum::zero();
    for ((a, b), c) in coproduct(&f).terms() {
        folded = folded.add(
            &antipode(&ForestSum::from_forest(a.clone()))
                .mul(&ForestSum::from_forest(b.clone()))
                .scale(c),
        );
    }
    assert!(folded.is_zero(), "degree-3 forests lie in the counit kernel");
    println!("antipode axiom verified on [[]][]");
}

fn display(f: &Forest) -> String {
    if f.is_empty() { "1".to_string() } else { f.render() }
}
