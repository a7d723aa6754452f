//! Randomized structural properties, complementing the exhaustive sweeps.

use proptest::prelude::*;

use rtmaps::forest::{Forest, Tree};
use rtmaps::harmonic::{diamond, star};
use rtmaps::hopf::{antipode, coproduct, ForestSum};
use rtmaps::rtm::{f_poly, rtm_apply};
use rtmaps::word::{endo_map, EndoMap, Letter, Word, WordSum};

fn arb_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::bool::ANY, 0..=max_len)
        .prop_map(|bits| Word(bits.into_iter().map(|b| if b { Letter::Y } else { Letter::X }).collect()))
}

fn arb_tree() -> impl Strategy<Value = Tree> {
    let leaf = Just(Tree::leaf());
    leaf.prop_recursive(3, 6, 3, |inner| {
        prop::collection::vec(inner, 0..3).prop_map(Tree::new)
    })
}

fn arb_forest() -> impl Strategy<Value = Forest> {
    prop::collection::vec(arb_tree(), 0..3).prop_map(Forest::from_trees)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forest_render_parse_roundtrip(f in arb_forest()) {
        let rendered = f.render();
        let reparsed = Forest::parse(&rendered).unwrap();
        prop_assert_eq!(&reparsed, &f);
        prop_assert_eq!(reparsed.render(), rendered);
    }

    #[test]
    fn word_render_parse_roundtrip(w in arb_word(8)) {
        let s = WordSum::from_word(w.clone());
        let reparsed = rtmaps::word::parse_word(&s.render()).unwrap();
        prop_assert_eq!(reparsed, s);
    }

    #[test]
    fn tau_is_an_involution(w in arb_word(8)) {
        let s = WordSum::from_word(w);
        let twice = endo_map(EndoMap::Tau, &endo_map(EndoMap::Tau, &s).unwrap()).unwrap();
        prop_assert_eq!(twice, s);
    }

    #[test]
    fn diamond_is_commutative_and_graded(a in arb_word(5), b in arb_word(5)) {
        let (sa, sb) = (WordSum::from_word(a.clone()), WordSum::from_word(b.clone()));
        let ab = diamond(&sa, &sb);
        prop_assert_eq!(&ab, &diamond(&sb, &sa));
        for (w, _) in ab.terms() {
            prop_assert_eq!(w.degree(), a.degree() + b.degree());
        }
    }

    #[test]
    fn star_is_commutative_on_admissible_inputs(a in arb_word(4), b in arb_word(4)) {
        let ya = WordSum::letter(Letter::Y).concat(&WordSum::from_word(a));
        let yb = WordSum::letter(Letter::Y).concat(&WordSum::from_word(b));
        prop_assert_eq!(star(&ya, &yb).unwrap(), star(&yb, &ya).unwrap());
    }

    #[test]
    fn coproduct_is_graded(f in arb_forest()) {
        prop_assume!(f.degree() <= 6);
        for ((a, b), _) in coproduct(&ForestSum::from_forest(f.clone())).terms() {
            prop_assert_eq!(a.degree() + b.degree(), f.degree());
        }
    }

    #[test]
    fn antipode_is_an_involution_on_forests(f in arb_forest()) {
        prop_assume!(f.degree() <= 6);
        // S is an algebra antihomomorphism with S² = id in this commutative setting
        let s = ForestSum::from_forest(f);
        prop_assert_eq!(antipode(&antipode(&s)), s);
    }

    #[test]
    fn map_application_is_degree_additive(f in arb_forest(), w in arb_word(4)) {
        prop_assume!(f.degree() <= 5);
        prop_assume!(!w.is_one());
        let image = rtm_apply(&ForestSum::from_forest(f.clone()), &WordSum::from_word(w.clone()));
        for (v, _) in image.terms() {
            prop_assert_eq!(v.degree(), f.degree() + w.degree());
        }
    }

    #[test]
    fn f_polynomial_is_homogeneous(f in arb_forest()) {
        prop_assume!(f.degree() >= 1 && f.degree() <= 5);
        let p = f_poly(&ForestSum::from_forest(f.clone()));
        for (v, _) in p.terms() {
            prop_assert_eq!(v.degree(), f.degree());
            prop_assert!(v.starts_with_y());
        }
    }
}
