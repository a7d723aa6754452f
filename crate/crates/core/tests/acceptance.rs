//! Acceptance suite: one test per criterion, so the harness prints one
//! pass/fail line for each.  Each criterion re-runs the relevant identity
//! sweeps at the contracted bounds through the public API.

use rtmaps::forest::enumerate_forests;
use rtmaps::harmonic::{diamond, star};
use rtmaps::hopf::{antipode, ForestSum};
use rtmaps::mzv::{
    duality_relation, relation_from_rtm, verify_relation_numeric, word_index, zeta_numeric,
    zeta_truncated, Index, DEFAULT_TERMS,
};
use rtmaps::rational::{q_int, Q};
use rtmaps::rtm::{f_poly, rtm_apply, span_rank};
use rtmaps::verify::{verify_identity, Bounds, IdentityName};
use rtmaps::word::{parse_word, words_of_degree, Letter, Word, WordSum};

fn assert_pass(name: IdentityName, bounds: Bounds) {
    let r = verify_identity(name, bounds);
    assert!(
        r.passed(),
        "{} failed at {:?}: {:?}",
        r.identity,
        r.bounds,
        r.counterexample
    );
    assert!(r.checked > 0, "{} checked nothing", r.identity);
}

fn assert_pass_default(name: IdentityName) {
    assert_pass(name, name.default_bounds());
}

#[test]
fn criterion_01_hopf_axioms() {
    assert_pass(IdentityName::Coassoc, Bounds::new(5, 0));
    assert_pass(IdentityName::AntipodeAxiom, Bounds::new(5, 0));
}

#[test]
fn criterion_02_coproduct_oracle() {
    assert_pass(IdentityName::CopOracle, Bounds::new(6, 0));
}

#[test]
fn criterion_03_map_equals_diamond_with_f() {
    // exhaustive grid plus 200 seeded random cases at degree 5-6
    assert_pass(
        IdentityName::Thm1,
        Bounds { max_forest_degree: 4, max_word_length: 4, random_cases: 200 },
    );
}

#[test]
fn criterion_04_antipode_map_and_g() {
    assert_pass(
        IdentityName::Thm2,
        Bounds { max_forest_degree: 4, max_word_length: 4, random_cases: 200 },
    );
    assert_pass(IdentityName::Cor, Bounds::new(5, 0));
}

#[test]
fn criterion_05_conjugation_by_tau() {
    assert_pass(IdentityName::Thm3, Bounds::new(3, 4));
}

#[test]
fn criterion_06_key_proposition() {
    assert_pass(IdentityName::PropKey, Bounds::new(3, 2));
}

#[test]
fn criterion_07_f_diamond_g_vanishes() {
    assert_pass(IdentityName::PropFg0, Bounds::new(5, 0));
}

#[test]
fn criterion_08_tensor_membership() {
    assert_pass(IdentityName::PropB, Bounds::new(4, 0));
}

#[test]
fn criterion_09_supporting_lemmas() {
    for name in [
        IdentityName::LemZ,
        IdentityName::LemD,
        IdentityName::LemY,
        IdentityName::LemU,
        IdentityName::Eq1,
        IdentityName::Eq963,
        IdentityName::LemIm,
        IdentityName::LemTau,
        IdentityName::OpEq3,
        IdentityName::PropFs,
        IdentityName::LemPq,
        IdentityName::MUZero,
        IdentityName::PhiDiamond,
        IdentityName::FactorOrder,
        IdentityName::ProdLaws,
        IdentityName::RtmImage,
    ] {
        assert_pass_default(name);
    }
}

#[test]
fn criterion_10_span_rank() {
    for n in 1..=5usize {
        let (rank, dim) = span_rank(n);
        assert_eq!(dim, 1 << (n - 1));
        assert_eq!(rank, dim, "rank deficit at degree {}", n);
    }
}

#[test]
fn criterion_11_numeric_backstop() {
    // the fast evaluation sits inside the truncated-sum bracket
    let z2 = Index::parse("2").unwrap();
    let fast = zeta_numeric(&z2, DEFAULT_TERMS).unwrap();
    let (truncated, bound) = zeta_truncated(&z2, 100_000).unwrap();
    assert!(
        (fast - truncated).abs() <= bound + 1e-10,
        "zeta(2): fast {} vs truncated {} ± {}",
        fast,
        truncated,
        bound
    );

    let z12 = zeta_numeric(&Index::parse("1,2").unwrap(), DEFAULT_TERMS).unwrap();
    let z3 = zeta_numeric(&Index::parse("3").unwrap(), DEFAULT_TERMS).unwrap();
    assert!((z12 - z3).abs() < 1e-10, "zeta(1,2)={} zeta(3)={}", z12, z3);

    // relations from every forest of degree 1..=3 on every admissible seed
    // of weight <= 4
    let mut relations = 0usize;
    for degree in 1..=3usize {
        for f in enumerate_forests(degree) {
            for len in 2..=4usize {
                for w in words_of_degree(len) {
                    if !(w.starts_with_y() && w.ends_with_x()) {
                        continue;
                    }
                    let rel = relation_from_rtm(&ForestSum::from_forest(f.clone()), &w).unwrap();
                    let (ok, res) = verify_relation_numeric(&rel, 1e-8, DEFAULT_TERMS).unwrap();
                    assert!(ok, "f={} seed={} residual {}", f, w, res);
                    relations += 1;
                }
            }
        }
    }
    assert_eq!(relations, 49);

    // duality for every admissible word of weight <= 6
    for len in 2..=6usize {
        for w in words_of_degree(len) {
            if !(w.starts_with_y() && w.ends_with_x()) {
                continue;
            }
            let rel = duality_relation(&w).unwrap();
            let (ok, res) = verify_relation_numeric(&rel, 1e-8, DEFAULT_TERMS).unwrap();
            assert!(ok, "duality {} residual {}", w, res);
        }
    }
}

/// The diamond recursion with the sign of the y/y merge case flipped.
fn broken_diamond(a: &Word, b: &Word) -> WordSum {
    if a.is_one() {
        return WordSum::from_word(b.clone());
    }
    if b.is_one() {
        return WordSum::from_word(a.clone());
    }
    let (ha, ta) = (a.0[0], Word(a.0[1..].to_vec()));
    let (hb, tb) = (b.0[0], Word(b.0[1..].to_vec()));
    let lift = |h: Letter, s: &WordSum| WordSum::letter(h).concat(s);
    let prepend = |h: Letter, w: &Word| {
        let mut v = vec![h];
        v.extend_from_slice(&w.0);
        Word(v)
    };
    match (ha, hb) {
        (Letter::X, Letter::X) => lift(Letter::X, &broken_diamond(&ta, b))
            .sub(&lift(Letter::X, &broken_diamond(&prepend(Letter::Y, &ta), &tb))),
        (Letter::X, Letter::Y) => lift(Letter::X, &broken_diamond(&ta, b))
            .add(&lift(Letter::Y, &broken_diamond(a, &tb))),
        (Letter::Y, Letter::X) => lift(Letter::Y, &broken_diamond(&ta, b))
            .add(&lift(Letter::X, &broken_diamond(&prepend(Letter::Y, &ta), &tb))),
        // the genuine recursion subtracts this merge term
        (Letter::Y, Letter::Y) => lift(Letter::Y, &broken_diamond(&ta, b))
            .add(&lift(Letter::Y, &broken_diamond(&prepend(Letter::X, &ta), &tb))),
    }
}

#[test]
fn criterion_12_mutation_sanity() {
    let dot = ForestSum::from_forest(rtmaps::Forest::parse("[]").unwrap());
    let y = Word(vec![Letter::Y]);

    // flipping the y/y sign in the diamond recursion breaks the main theorem
    let genuine = diamond(&f_poly(&dot), &WordSum::from_word(y.clone()));
    let mut broken = WordSum::zero();
    for (w, c) in f_poly(&dot).terms() {
        broken = broken.add(&broken_diamond(w, &y).scale(c));
    }
    let lhs = rtm_apply(&dot, &WordSum::from_word(y.clone()).concat(&WordSum::letter(Letter::X)));
    assert_eq!(lhs, genuine.concat(&WordSum::letter(Letter::X)));
    assert_ne!(
        lhs,
        broken.concat(&WordSum::letter(Letter::X)),
        "sign flip in the diamond recursion went undetected"
    );

    // flipping the sign of G on the one-vertex tree breaks the vanishing sum
    let mutated_g = |f: &ForestSum| -> WordSum {
        // G with the base case +y instead of -y: on the one-vertex forest
        // this is exactly the negation
        let g = rtmaps::rtm::g_poly(f);
        if f.terms().all(|(fo, _)| fo.degree() == 1) {
            g.scale(&q_int(-1))
        } else {
            g
        }
    };
    let mut acc = WordSum::zero();
    for ((fp, fpp), c) in rtmaps::hopf::coproduct(&dot).terms() {
        acc = acc.add(
            &diamond(
                &f_poly(&ForestSum::from_forest(fp.clone())),
                &mutated_g(&ForestSum::from_forest(fpp.clone())),
            )
            .scale(c),
        );
    }
    assert!(
        !acc.is_zero(),
        "sign flip in the G base case went undetected"
    );

    // sanity: the genuine versions do satisfy both statements
    let mut genuine_acc = WordSum::zero();
    for ((fp, fpp), c) in rtmaps::hopf::coproduct(&dot).terms() {
        genuine_acc = genuine_acc.add(
            &diamond(
                &f_poly(&ForestSum::from_forest(fp.clone())),
                &rtmaps::rtm::g_poly(&ForestSum::from_forest(fpp.clone())),
            )
            .scale(c),
        );
    }
    assert!(genuine_acc.is_zero());
}

#[test]
fn exact_scalars_and_canonical_order_hold_end_to_end() {
    // star products produce exact rationals, never floats
    let a = parse_word("y").unwrap();
    let two_yy_minus_yx = star(&a, &a).unwrap();
    let expected: Vec<(String, Q)> = vec![
        ("yx".into(), q_int(1)),
        ("yy".into(), q_int(2)),
    ];
    let got: Vec<(String, Q)> = two_yy_minus_yx
        .terms()
        .map(|(w, c)| (w.render(), c.clone()))
        .collect();
    assert_eq!(got, expected);

    // antipode coefficients are exact integers on small forests
    let s = antipode(&ForestSum::from_forest(rtmaps::Forest::parse("[[]]").unwrap()));
    for (_, c) in s.terms() {
        assert!(c.is_integer());
    }

    // relation JSON carries indices, not raw words
    let rel = relation_from_rtm(
        &ForestSum::from_forest(rtmaps::Forest::parse("[]").unwrap()),
        &parse_word("yx").unwrap().terms().next().unwrap().0.clone(),
    )
    .unwrap();
    let v = rel.to_json(None);
    assert!(v["terms"].as_array().unwrap().iter().all(|t| t["index"].is_array()));
    for t in v["terms"].as_array().unwrap() {
        let parts: Vec<usize> = t["index"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_u64().unwrap() as usize)
            .collect();
        let idx = Index::new(parts).unwrap();
        assert!(idx.admissible());
        let w = rtmaps::mzv::index_word(&idx);
        assert_eq!(word_index(&w).unwrap(), idx);
    }
}
