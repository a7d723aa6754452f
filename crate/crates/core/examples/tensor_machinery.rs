//! The tensor-space toolkit: the embedding u, the componentwise stuffle,
//! the contraction M, the maps p and q, and exact membership tests.
//!
//! Run with: cargo run --example tensor_machinery

use rtmaps::harmonic::{
    b_membership, harub, m_contract, pq_of_u, tensor_star, u_map, PqMap, WordTensorSum,
};
use rtmaps::word::{parse_word, Word};

fn word(s: &str) -> Word {
    parse_word(s).unwrap().terms().next().unwrap().0.clone()
}

fn main() {
    // u sends a word starting with y to an alternating tensor sum.
    let u_yx = u_map(&word("yx")).unwrap();
    println!("u(yx) = {}", u_yx.render());

    // u is multiplicative: u(w1 ⊛ w2) = u(w1) ∗ u(w2).
    let uy = u_map(&word("y")).unwrap();
    let product = tensor_star(&uy, &uy).unwrap();
    let mut expanded = WordTensorSum::zero();
    let w1w2 = harub(&parse_word("y").unwrap(), &parse_word("y").unwrap()).unwrap();
    for (v, c) in w1w2.terms() {
        expanded = expanded.add(&u_map(v).unwrap().scale(c));
    }
    assert_eq!(product, expanded);
    println!("u(y ⊛ y) = u(y) ∗ u(y) = {}", product.render());

    // The contraction M annihilates every u-image of positive degree.
    assert!(m_contract(&u_yx).unwrap().is_zero());
    println!("M(u(yx)) = 0");

    // p raises the first exponent; q prepends a block of one and negates.
    println!("p(u(yx)) = {}", pq_of_u(PqMap::P, &word("yx")).unwrap().render());
    println!("q(u(yx)) = {}", pq_of_u(PqMap::Q, &word("yx")).unwrap().render());

    // Membership in the subalgebra spanned by the u-images is decided by
    // exact rational linear algebra.
    println!(
        "u(yx) in B: {}",
        b_membership(&u_yx, 2).unwrap()
    );
    let outside = WordTensorSum::from_pair(word("yx"), Word::one());
    println!(
        "yx ⊗ 1 in B: {}",
        b_membership(&outside, 2).unwrap()
    );
}
