//! Generating relations among multiple zeta values from forests, plus
//! duality relations, with high-precision numeric confirmation.
//!
//! Run with: cargo run --release --example zeta_relations

use rtmaps::forest::enumerate_forests;
use rtmaps::hopf::ForestSum;
use rtmaps::mzv::{
    duality_relation, relation_from_rtm, verify_relation_numeric, word_index, zeta_numeric,
    Index, DEFAULT_TERMS, DEFAULT_TOL,
};
use rtmaps::word::{parse_word, Word};

fn word(s: &str) -> Word {
    parse_word(s).unwrap().terms().next().unwrap().0.clone()
}

fn describe(lhs: &rtmaps::word::WordSum) -> String {
    lhs.terms()
        .map(|(w, c)| format!("{}·ζ{}", rtmaps::rational::render_q(c), word_index(w).unwrap()))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn main() {
    // Euler: the single-vertex tree applied to the word for ζ(2) yields
    // ζ(1,2) - ζ(3) = 0.
    for f in enumerate_forests(1) {
        let rel = relation_from_rtm(&ForestSum::from_forest(f), &word("yx")).unwrap();
        let (ok, residual) = verify_relation_numeric(&rel, DEFAULT_TOL, DEFAULT_TERMS).unwrap();
        println!("{} = 0  (numeric ok: {}, residual {:.2e})", describe(&rel.lhs), ok, residual);
    }

    // Degree-2 forests on the seed for ζ(3) give weight-5 relations.
    for f in enumerate_forests(2) {
        let rel = relation_from_rtm(&ForestSum::from_forest(f.clone()), &word("yxx")).unwrap();
        let (ok, residual) = verify_relation_numeric(&rel, DEFAULT_TOL, DEFAULT_TERMS).unwrap();
        println!("f = {}: {} = 0  (ok: {}, residual {:.2e})", f, describe(&rel.lhs), ok, residual);
    }

    // Duality: ζ(3) = ζ(1,2) again, through the word reversal map.
    let rel = duality_relation(&word("yxx")).unwrap();
    let (ok, residual) = verify_relation_numeric(&rel, DEFAULT_TOL, DEFAULT_TERMS).unwrap();
    println!("duality on yxx: {} = 0  (ok: {}, residual {:.2e})", describe(&rel.lhs), ok, residual);

    // Direct evaluation of a few constants.
    for text in ["2", "3", "1,2", "2,2", "1,3"] {
        let idx = Index::parse(text).unwrap();
        println!("ζ{} ≈ {:.15}", idx, zeta_numeric(&idx, DEFAULT_TERMS).unwrap());
    }
}
