//! The three harmonic-type products: ∗ (series stuffle), ⊛ (its
//! sign-flipped variant), and ⋄ (defined on all words).
//!
//! Run with: cargo run --example harmonic_products

use rtmaps::harmonic::{diamond, harub, star};
use rtmaps::word::parse_word;

fn main() {
    let y = parse_word("y").unwrap();
    let yx = parse_word("yx").unwrap();
    let x = parse_word("x").unwrap();

    // The stuffle product models multiplying nested zeta series:
    // ζ(1)·ζ(1,2)-shape words interleave and merge.
    println!("y * yx  = {}", star(&y, &yx).unwrap().render());
    println!("y * y   = {}", star(&y, &y).unwrap().render());

    // The variant product flips the sign of every merged term.
    println!("y ⊛ yx  = {}", harub(&y, &yx).unwrap().render());
    println!("y ⊛ y   = {}", harub(&y, &y).unwrap().render());

    // The diamond product extends to arbitrary words, including those
    // outside the span of words starting with y.
    println!("x ⋄ y   = {}", diamond(&x, &y).render());
    println!("y ⋄ y   = {}", diamond(&y, &y).render());

    // Bilinearity over exact rationals.
    let p = parse_word("y + 1/2 yx").unwrap();
    println!("(y + 1/2 yx) * y = {}", star(&p, &y).unwrap().render());

    // The two A¹ products reject inputs outside their domain.
    println!("x * y  -> {}", star(&x, &y).unwrap_err());
}
