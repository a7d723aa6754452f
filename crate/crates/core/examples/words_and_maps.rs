//! Words in x and y, linear combinations, and the letter-substitution maps.
//!
//! Run with: cargo run --example words_and_maps

use rtmaps::word::{endo_map, parse_word, EndoMap};

fn main() {
    // Polynomials parse with integer or rational coefficients; the letter z
    // abbreviates x + y and is expanded on input.
    let p = parse_word("yxx + 2 yyx").unwrap();
    println!("parsed: {}", p.render());
    let q = parse_word("zx").unwrap();
    println!("zx expands to: {}", q.render());

    // tau reverses a word and swaps the letters; it realizes duality.
    let w = parse_word("yxx").unwrap();
    println!("tau(yxx) = {}", endo_map(EndoMap::Tau, &w).unwrap().render());

    // phi sends x to x + y and y to -y.
    let yx = parse_word("yx").unwrap();
    println!("phi(yx)  = {}", endo_map(EndoMap::Phi, &yx).unwrap().render());

    // d and rho act block-by-block on words starting with y.
    let v = parse_word("yxy").unwrap();
    println!("d(yxy)   = {}", endo_map(EndoMap::D, &v).unwrap().render());
    let u = parse_word("yxyy").unwrap();
    println!("rho(yxyy) = {}", endo_map(EndoMap::Rho, &u).unwrap().render());

    // rho is an involution on its domain.
    let back = endo_map(EndoMap::Rho, &endo_map(EndoMap::Rho, &u).unwrap()).unwrap();
    assert_eq!(back, u);
    println!("rho(rho(yxyy)) = yxyy");

    // maps with a restricted domain report it
    let outside = parse_word("xy").unwrap();
    println!("d(xy) -> {}", endo_map(EndoMap::D, &outside).unwrap_err());
}
