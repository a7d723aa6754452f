//! The harmonic-type products ∗ (on A¹), ⊛ (on A¹) and ⋄ (on all of A),
//! together with the tensor machinery: the map u, componentwise ∗ on
//! tensors, the contraction M, the closed forms of p and q, and membership
//! in the subalgebra generated by the u-images.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::hopf::push_signed_term;
use crate::linalg;
use crate::rational::{q_int, q_one, render_q, Q};
use crate::word::{a1_words_of_degree, Letter, Word, WordError, WordSum};

/// Block view of an A¹ word: yx^{k₁-1}⋯yx^{k_r-1} ↦ (k₁,…,k_r).
/// The empty sequence represents 1.
pub fn word_blocks(w: &Word) -> Option<Vec<usize>> {
    if w.is_one() {
        return Some(Vec::new());
    }
    if !w.starts_with_y() {
        return None;
    }
    let mut blocks = Vec::new();
    for &l in &w.0 {
        match l {
            Letter::Y => blocks.push(1usize),
            Letter::X => *blocks.last_mut().unwrap() += 1,
        }
    }
    Some(blocks)
}

pub fn blocks_word(blocks: &[usize]) -> Word {
    let mut ls = Vec::with_capacity(blocks.iter().sum());
    for &k in blocks {
        ls.push(Letter::Y);
        for _ in 1..k {
            ls.push(Letter::X);
        }
    }
    Word(ls)
}

fn prepend_block(k: usize, s: &WordSum) -> WordSum {
    let head = WordSum::from_word(blocks_word(&[k]));
    head.concat(s)
}

fn quasi_shuffle(a: &[usize], b: &[usize], merged_sign: i64) -> WordSum {
    if a.is_empty() {
        return WordSum::from_word(blocks_word(b));
    }
    if b.is_empty() {
        return WordSum::from_word(blocks_word(a));
    }
    let mut out = prepend_block(a[0], &quasi_shuffle(&a[1..], b, merged_sign));
    out = out.add(&prepend_block(b[0], &quasi_shuffle(a, &b[1..], merged_sign)));
    let merged = prepend_block(a[0] + b[0], &quasi_shuffle(&a[1..], &b[1..], merged_sign));
    out.add(&merged.scale(&q_int(merged_sign)))
}

fn bilinear_a1(
    a: &WordSum,
    b: &WordSum,
    f: impl Fn(&[usize], &[usize]) -> WordSum,
) -> Result<WordSum, WordError> {
    let mut out = WordSum::zero();
    for (wa, ca) in a.terms() {
        let ba = word_blocks(wa).ok_or_else(|| WordError::Domain(wa.render(), "A1"))?;
        for (wb, cb) in b.terms() {
            let bb = word_blocks(wb).ok_or_else(|| WordError::Domain(wb.render(), "A1"))?;
            out = out.add(&f(&ba, &bb).scale(&(ca * cb)));
        }
    }
    Ok(out)
}

/// The harmonic product ∗ on A¹.
pub fn star(a: &WordSum, b: &WordSum) -> Result<WordSum, WordError> {
    bilinear_a1(a, b, |x, y| quasi_shuffle(x, y, 1))
}

/// The product ⊛ on A¹: the ∗ recursion with the merged-block term negated.
pub fn harub(a: &WordSum, b: &WordSum) -> Result<WordSum, WordError> {
    bilinear_a1(a, b, |x, y| quasi_shuffle(x, y, -1))
}

fn diamond_cache() -> &'static Mutex<HashMap<(Word, Word), WordSum>> {
    static CACHE: OnceLock<Mutex<HashMap<(Word, Word), WordSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn diamond_words(a: &Word, b: &Word) -> WordSum {
    if a.is_one() {
        return WordSum::from_word(b.clone());
    }
    if b.is_one() {
        return WordSum::from_word(a.clone());
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = diamond_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let (ha, ta) = (a.0[0], Word(a.0[1..].to_vec()));
    let (hb, tb) = (b.0[0], Word(b.0[1..].to_vec()));
    let cons = |l: Letter, s: &WordSum| -> WordSum {
        WordSum::letter(l).concat(s)
    };
    let out = match (ha, hb) {
        (Letter::X, Letter::X) => {
            // x(w1 ⋄ xw2) - x(yw1 ⋄ w2)
            let mut ya = vec![Letter::Y];
            ya.extend_from_slice(&ta.0);
            cons(Letter::X, &diamond_words(&ta, b))
                .sub(&cons(Letter::X, &diamond_words(&Word(ya), &tb)))
        }
        (Letter::X, Letter::Y) => {
            cons(Letter::X, &diamond_words(&ta, b))
                .add(&cons(Letter::Y, &diamond_words(a, &tb)))
        }
        (Letter::Y, Letter::X) => {
            cons(Letter::Y, &diamond_words(&ta, b))
                .add(&cons(Letter::X, &diamond_words(a, &tb)))
        }
        (Letter::Y, Letter::Y) => {
            let mut xa = vec![Letter::X];
            xa.extend_from_slice(&ta.0);
            cons(Letter::Y, &diamond_words(&ta, b))
                .sub(&cons(Letter::Y, &diamond_words(&Word(xa), &tb)))
        }
    };
    diamond_cache().lock().unwrap().insert(key, out.clone());
    out
}

/// The product ⋄, defined on all of A by the four-case letter recursion.
pub fn diamond(a: &WordSum, b: &WordSum) -> WordSum {
    let mut out = WordSum::zero();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            out = out.add(&diamond_words(wa, wb).scale(&(ca * cb)));
        }
    }
    out
}

/// A finite ℚ-linear combination of word pairs, components in A¹.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordTensorSum {
    terms: BTreeMap<(Word, Word), Q>,
}

impl WordTensorSum {
    pub fn zero() -> WordTensorSum {
        WordTensorSum::default()
    }

    pub fn unit() -> WordTensorSum {
        WordTensorSum::from_pair(Word::one(), Word::one())
    }

    pub fn from_pair(a: Word, b: Word) -> WordTensorSum {
        let mut terms = BTreeMap::new();
        terms.insert((a, b), q_one());
        WordTensorSum { terms }
    }

    /// Bilinear outer product a ⊗ b of two word sums.
    pub fn outer(a: &WordSum, b: &WordSum) -> WordTensorSum {
        let mut out = WordTensorSum::zero();
        for (wa, ca) in a.terms() {
            for (wb, cb) in b.terms() {
                out.add_term(wa.clone(), wb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WordTensorSum) -> WordTensorSum {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WordTensorSum) -> WordTensorSum {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn scale(&self, c: &Q) -> WordTensorSum {
        if c.is_zero() {
            return WordTensorSum::zero();
        }
        WordTensorSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Prepends a word to every left component; the block-shift L′_a is
    /// `left_shift(yx^{a-1})`.
    pub fn left_shift(&self, prefix: &Word) -> WordTensorSum {
        let mut out = WordTensorSum::zero();
        for ((a, b), c) in self.terms() {
            out.add_term(prefix.concat(a), b.clone(), c.clone());
        }
        out
    }

    pub fn in_a1(&self) -> bool {
        self.terms.keys().all(|(a, b)| a.in_a1() && b.in_a1())
    }

    /// Total degree if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut deg = None;
        for ((a, b), _) in self.terms() {
            let d = a.degree() + b.degree();
            match deg {
                None => deg = Some(d),
                Some(e) if e == d => {}
                _ => return None,
            }
        }
        deg
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((a, b), c)) in self.terms.iter().enumerate() {
            push_signed_term(&mut out, i == 0, c, &format!("{} (x) {}", a, b));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|((a, b), c)| {
                    serde_json::json!({
                        "coeff": render_q(c),
                        "left": a.render(),
                        "right": b.render(),
                    })
                })
                .collect(),
        )
    }
}

/// Componentwise harmonic product on tensors.
pub fn tensor_star(a: &WordTensorSum, b: &WordTensorSum) -> Result<WordTensorSum, WordError> {
    let mut out = WordTensorSum::zero();
    for ((a1, b1), c1) in a.terms() {
        for ((a2, b2), c2) in b.terms() {
            let left = star(&WordSum::from_word(a1.clone()), &WordSum::from_word(a2.clone()))?;
            let right = star(&WordSum::from_word(b1.clone()), &WordSum::from_word(b2.clone()))?;
            out = out.add(&WordTensorSum::outer(&left, &right).scale(&(c1 * c2)));
        }
    }
    Ok(out)
}

/// M(w₁ ⊗ w₂) = w₁ ∗ w₂, extended linearly; vanishes on the subalgebra B.
pub fn m_contract(t: &WordTensorSum) -> Result<WordSum, WordError> {
    let mut out = WordSum::zero();
    for ((a, b), c) in t.terms() {
        let s = star(&WordSum::from_word(a.clone()), &WordSum::from_word(b.clone()))?;
        out = out.add(&s.scale(c));
    }
    Ok(out)
}

/// The alternating tensor sum u(w) for a single A¹ word, with z = x + y
/// expanded in the right components; u(1) = 1 ⊗ 1.
pub fn u_map(w: &Word) -> Result<WordTensorSum, WordError> {
    let blocks = word_blocks(w).ok_or_else(|| WordError::Domain(w.render(), "A1"))?;
    Ok(u_of_blocks(&blocks))
}

fn u_of_blocks(blocks: &[usize]) -> WordTensorSum {
    let r = blocks.len();
    let mut out = WordTensorSum::zero();
    for i in 0..=r {
        let left = WordSum::from_word(blocks_word(&blocks[..i]));
        let right = zx_tail(&blocks[i..]);
        let sign = if i % 2 == 0 { q_one() } else { q_int(-1) };
        out = out.add(&WordTensorSum::outer(&left, &right).scale(&sign));
    }
    out
}

/// yx^{k_t-1} z x^{k_{t-1}-1} ⋯ z x^{k_1-1} for the block slice (k_1..k_t),
/// z expanded; the empty slice gives 1.
fn zx_tail(blocks: &[usize]) -> WordSum {
    if blocks.is_empty() {
        return WordSum::one();
    }
    let t = blocks.len();
    let mut out = WordSum::from_word(blocks_word(&[blocks[t - 1]]));
    for j in (0..t - 1).rev() {
        let mut seg = WordSum::z();
        for _ in 1..blocks[j] {
            seg = seg.concat(&WordSum::letter(Letter::X));
        }
        out = out.concat(&seg);
    }
    out
}

/// dρ(w) as a closed form: yx^{k_r-1} z x^{k_{r-1}-1} ⋯ z x^{k_1-1}.
pub fn d_rho_closed(w: &Word) -> Result<WordSum, WordError> {
    let blocks = word_blocks(w).ok_or_else(|| WordError::Domain(w.render(), "A1"))?;
    Ok(zx_tail(&blocks))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PqMap {
    P,
    Q,
}

/// Closed form of p or q on u(w): p raises the first exponent, so
/// p(u_w) = u(yx^{k1}yx^{k2-1}...), while q prepends a block of size one
/// and flips the sign, q(u_w) = -u(y·w).  The sign follows from the
/// recursion u(yw) = 1⊗dρ(yw) - L'_y u(w) together with dρ(yw) = dρ(w)z.
pub fn pq_of_u(which: PqMap, w: &Word) -> Result<WordTensorSum, WordError> {
    let blocks = word_blocks(w).ok_or_else(|| WordError::Domain(w.render(), "yA"))?;
    if blocks.is_empty() {
        return Err(WordError::Domain(w.render(), "yA"));
    }
    let mut blocks = blocks;
    match which {
        PqMap::P => {
            blocks[0] += 1;
            Ok(u_of_blocks(&blocks))
        }
        PqMap::Q => {
            blocks.insert(0, 1);
            Ok(u_of_blocks(&blocks).scale(&q_int(-1)))
        }
    }
}

/// The defining formulas of p and q evaluated on u(w); an independent route
/// to `pq_of_u`.
pub fn pq_definitional(which: PqMap, w: &Word) -> Result<WordTensorSum, WordError> {
    let blocks = word_blocks(w).ok_or_else(|| WordError::Domain(w.render(), "yA"))?;
    if blocks.is_empty() {
        return Err(WordError::Domain(w.render(), "yA"));
    }
    let u_w = u_of_blocks(&blocks);
    let drho = zx_tail(&blocks);
    match which {
        PqMap::P => {
            // Σ_{left ∉ ℚ} yx L_y⁻¹(left) ⊗ right  +  1 ⊗ dρ(w)x
            let mut out = WordTensorSum::zero();
            for ((a, b), c) in u_w.terms() {
                if a.is_one() {
                    continue;
                }
                let mut ls = vec![Letter::Y, Letter::X];
                ls.extend_from_slice(&a.0[1..]);
                out.add_term(Word(ls), b.clone(), c.clone());
            }
            let tail = WordTensorSum::outer(
                &WordSum::one(),
                &drho.concat(&WordSum::letter(Letter::X)),
            );
            Ok(out.add(&tail))
        }
        PqMap::Q => {
            // L′_y(u_w) - 1 ⊗ dρ(w)z
            let shifted = u_w.left_shift(&Word(vec![Letter::Y]));
            let tail = WordTensorSum::outer(&WordSum::one(), &drho.concat(&WordSum::z()));
            Ok(shifted.sub(&tail))
        }
    }
}

/// Coordinates of a homogeneous tensor over a fixed list of word pairs.
fn tensor_coords(t: &WordTensorSum, keys: &[(Word, Word)]) -> Vec<Q> {
    let index: HashMap<&(Word, Word), usize> =
        keys.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let mut v = vec![Q::zero(); keys.len()];
    for (k, c) in t.terms() {
        v[index[k]] = c.clone();
    }
    v
}

/// The degree-n slice of the subalgebra B is spanned by { u(v) : v an A¹
/// word of degree n }; this returns that spanning set.
pub fn u_basis(n: usize) -> Vec<(Word, WordTensorSum)> {
    a1_words_of_degree(n)
        .into_iter()
        .map(|v| {
            let t = u_map(&v).expect("A1 word");
            (v, t)
        })
        .collect()
}

/// Expresses a homogeneous tensor in the u-basis, or None if it lies
/// outside the degree-n slice of B.
pub fn solve_on_u_basis(t: &WordTensorSum, n: usize) -> Result<Option<Vec<(Word, Q)>>, WordError> {
    match t.homogeneous_degree() {
        Some(d) if d == n => {}
        None if t.is_zero() => return Ok(Some(Vec::new())),
        _ => {
            return Err(WordError::Precondition(format!(
                "tensor is not homogeneous of degree {}",
                n
            )))
        }
    }
    let basis = u_basis(n);
    let mut keys: Vec<(Word, Word)> = t.terms().map(|(k, _)| k.clone()).collect();
    for (_, b) in &basis {
        keys.extend(b.terms().map(|(k, _)| k.clone()));
    }
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<Q>> = basis.iter().map(|(_, b)| tensor_coords(b, &keys)).collect();
    let target = tensor_coords(t, &keys);
    Ok(linalg::solve_in_span(&rows, &target).map(|coeffs| {
        basis
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|((w, _), c)| (w.clone(), c))
            .collect()
    }))
}

/// Membership of a homogeneous degree-n tensor in the subalgebra B.
pub fn b_membership(t: &WordTensorSum, n: usize) -> Result<bool, WordError> {
    Ok(solve_on_u_basis(t, n)?.is_some())
}
