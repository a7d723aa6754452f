//! The linear map attached to a forest, and the F and G polynomials that
//! describe it through the diamond product.
//!
//! Run with: cargo run --example tree_maps

use rtmaps::forest::Forest;
use rtmaps::harmonic::diamond;
use rtmaps::hopf::{antipode, ForestSum};
use rtmaps::rtm::{f_poly, g_poly, rtm_apply};
use rtmaps::word::parse_word;

fn main() {
    // The single-vertex tree applied to yx produces Euler's combination:
    // the coefficients of yyx - yxx mirror ζ(1,2) - ζ(3) = 0.
    let dot = ForestSum::from_forest(Forest::parse("[]").unwrap());
    let yx = parse_word("yx").unwrap();
    println!("[]~(yx) = {}", rtm_apply(&dot, &yx).render());

    // Each forest f has a polynomial F_f with f~(wx) = (F_f ⋄ w)x.
    let ladder2 = ForestSum::from_forest(Forest::parse("[[]]").unwrap());
    println!("F_[[]]  = {}", f_poly(&ladder2).render());
    println!("G_[[]]  = {}", g_poly(&ladder2).render());

    // G is F composed with the antipode.
    assert_eq!(g_poly(&ladder2), f_poly(&antipode(&ladder2)));
    println!("G_f = F_S(f) confirmed on [[]]");

    // Verify the factorization on a concrete case: [[]]~(yx·x) vs (F ⋄ yx)x.
    let x = parse_word("x").unwrap();
    let lhs = rtm_apply(&ladder2, &yx.concat(&x));
    let rhs = diamond(&f_poly(&ladder2), &yx).concat(&x);
    assert_eq!(lhs, rhs);
    println!("[[]]~(yxx) = {}", lhs.render());

    // Applying the map to x directly uses the grafting recursion.
    println!("[[]]~(x) = {}", rtm_apply(&ladder2, &x).render());
}
