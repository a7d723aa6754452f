//! Rooted tree maps f̃ ∈ End(ℚ⟨x,y⟩) and the polynomials F_f and G_f.
//!
//! The letter values are defined by the recursion
//!   (1) Ĩ = id,
//!   (2) •̃(x) = yx, •̃(y) = -yx,
//!   (3) t̃(u) = L_y L_{x+2y} L_y⁻¹ f̃(u) for t = B₊(f),
//!   (4) f̃ = g̃ ∘ h̃ for f = gh,
//!   (5) f̃(uw) = Σ f̃′(u) f̃″(w) over the Sweedler terms of Δ(f),
//! with f̃(1) = counit(f)·1.

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::forest::{enumerate_forests, Forest};
use crate::harmonic::diamond;
use crate::hopf::{antipode, coproduct, ForestSum};
use crate::linalg;
use crate::rational::Q;
use crate::word::{
    left_div_y, left_mul, right_mul, words_of_degree, Letter, Word, WordSum,
};

fn rtm_letter_cache() -> &'static Mutex<HashMap<(Forest, Letter), WordSum>> {
    static CACHE: OnceLock<Mutex<HashMap<(Forest, Letter), WordSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn rtm_word_cache() -> &'static Mutex<HashMap<(Forest, Word), WordSum>> {
    static CACHE: OnceLock<Mutex<HashMap<(Forest, Word), WordSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn f_cache() -> &'static Mutex<HashMap<Forest, WordSum>> {
    static CACHE: OnceLock<Mutex<HashMap<Forest, WordSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn g_cache() -> &'static Mutex<HashMap<Forest, WordSum>> {
    static CACHE: OnceLock<Mutex<HashMap<Forest, WordSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// L = L_y L_{x+2y} L_y⁻¹; the argument must lie in yA.
pub fn l_map(p: &WordSum) -> WordSum {
    let stripped = left_div_y(p).expect("rooted tree map image must lie in yA");
    let x2y = WordSum::parse("x + 2y").unwrap();
    left_mul(&WordSum::letter(Letter::Y), &left_mul(&x2y, &stripped))
}

/// f̃(u) for a single nonempty forest and a letter; rule (4) peels the
/// canonically first tree and applies the rest via `rtm_apply_word`.
pub fn rtm_letter(f: &Forest, u: Letter) -> WordSum {
    assert!(!f.is_empty(), "rtm_letter requires f != I");
    let key = (f.clone(), u);
    if let Some(hit) = rtm_letter_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let out = if f.trees().len() == 1 {
        let t = &f.trees()[0];
        if t.degree() == 1 {
            // the single vertex: x ↦ yx, y ↦ -yx
            let yx = WordSum::parse("yx").unwrap();
            match u {
                Letter::X => yx,
                Letter::Y => yx.neg(),
            }
        } else {
            let inner = rtm_letter(&t.b_minus(), u);
            l_map(&inner)
        }
    } else {
        let first = Forest::single(f.trees()[0].clone());
        let rest = Forest::from_trees(f.trees()[1..].to_vec());
        let inner = rtm_letter(&first, u);
        rtm_apply_word_sum(&rest, &inner)
    };
    rtm_letter_cache().lock().unwrap().insert(key, out.clone());
    out
}

fn rtm_apply_forest_word(f: &Forest, w: &Word) -> WordSum {
    if f.is_empty() {
        return WordSum::from_word(w.clone());
    }
    if w.is_one() {
        // f̃(1) = counit(f)·1, zero for nonempty forests
        return WordSum::zero();
    }
    if w.degree() == 1 {
        return rtm_letter(f, w.0[0]);
    }
    let key = (f.clone(), w.clone());
    if let Some(hit) = rtm_word_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    // rule (5): peel the first letter, sum over Sweedler terms of Δ(f)
    let head = w.0[0];
    let tail = Word(w.0[1..].to_vec());
    let mut out = WordSum::zero();
    for ((fp, fpp), c) in coproduct(&ForestSum::from_forest(f.clone())).terms() {
        let left = if fp.is_empty() {
            WordSum::letter(head)
        } else {
            rtm_letter(fp, head)
        };
        let right = rtm_apply_forest_word(fpp, &tail);
        out = out.add(&left.concat(&right).scale(c));
    }
    rtm_word_cache().lock().unwrap().insert(key, out.clone());
    out
}

fn rtm_apply_word_sum(f: &Forest, w: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (word, c) in w.terms() {
        out = out.add(&rtm_apply_forest_word(f, word).scale(c));
    }
    out
}

/// Applies the rooted tree map of a forest sum, linear in both arguments.
pub fn rtm_apply(f: &ForestSum, w: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (forest, c) in f.terms() {
        out = out.add(&rtm_apply_word_sum(forest, w).scale(c));
    }
    out
}

fn f_poly_forest(f: &Forest) -> WordSum {
    if f.is_empty() {
        return WordSum::one();
    }
    if let Some(hit) = f_cache().lock().unwrap().get(f) {
        return hit.clone();
    }
    let out = if f.trees().len() == 1 {
        let t = &f.trees()[0];
        if t.degree() == 1 {
            WordSum::letter(Letter::Y)
        } else {
            l_map(&f_poly_forest(&t.b_minus()))
        }
    } else {
        let first = Forest::single(f.trees()[0].clone());
        let rest = Forest::from_trees(f.trees()[1..].to_vec());
        diamond(&f_poly_forest(&first), &f_poly_forest(&rest))
    };
    f_cache().lock().unwrap().insert(f.clone(), out.clone());
    out
}

fn g_poly_forest(f: &Forest) -> WordSum {
    if f.is_empty() {
        return WordSum::one();
    }
    if let Some(hit) = g_cache().lock().unwrap().get(f) {
        return hit.clone();
    }
    let out = if f.trees().len() == 1 {
        let t = &f.trees()[0];
        if t.degree() == 1 {
            WordSum::letter(Letter::Y).neg()
        } else {
            let two_x_y = WordSum::parse("2x + y").unwrap();
            right_mul(&g_poly_forest(&t.b_minus()), &two_x_y)
        }
    } else {
        let first = Forest::single(f.trees()[0].clone());
        let rest = Forest::from_trees(f.trees()[1..].to_vec());
        diamond(&g_poly_forest(&first), &g_poly_forest(&rest))
    };
    g_cache().lock().unwrap().insert(f.clone(), out.clone());
    out
}

/// F_f, extended linearly: F_I = 1, F_• = y, F_{B₊(f)} = L(F_f),
/// F_{gh} = F_g ⋄ F_h.
pub fn f_poly(s: &ForestSum) -> WordSum {
    let mut out = WordSum::zero();
    for (f, c) in s.terms() {
        out = out.add(&f_poly_forest(f).scale(c));
    }
    out
}

/// G_f, extended linearly: G_I = 1, G_• = -y, G_{B₊(f)} = R_{2x+y}(G_f),
/// G_{gh} = G_g ⋄ G_h.
pub fn g_poly(s: &ForestSum) -> WordSum {
    let mut out = WordSum::zero();
    for (f, c) in s.terms() {
        out = out.add(&g_poly_forest(f).scale(c));
    }
    out
}

/// F_{S(f)} computed through the antipode; equals G_f (Corollary route).
pub fn f_poly_of_antipode(f: &ForestSum) -> WordSum {
    f_poly(&antipode(f))
}

/// Rank over ℚ of { F_f : f a forest of degree n } inside the span of
/// degree-n words beginning with y; the expected value is 2^{n-1}.
pub fn span_rank(n: usize) -> (usize, usize) {
    assert!(n >= 1);
    let basis: Vec<Word> = words_of_degree(n)
        .into_iter()
        .filter(|w| w.starts_with_y())
        .collect();
    let index: HashMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let rows: Vec<Vec<Q>> = enumerate_forests(n)
        .iter()
        .map(|f| {
            let p = f_poly_forest(f);
            let mut row = vec![Q::from_integer(0.into()); basis.len()];
            for (w, c) in p.terms() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    (linalg::rank(rows), 1usize << (n - 1))
}
