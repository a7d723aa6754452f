//! ℚ-linear combinations of forests and the Hopf algebra structure maps:
//! coproduct, counit, antipode, plus the subtree-enumeration oracle for the
//! coproduct.

use std::collections::BTreeMap;
use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::forest::{Forest, Tree};
use crate::rational::{q_int, q_one, render_q, Q};

/// A finite ℚ-linear combination of forests; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ForestSum {
    terms: BTreeMap<Forest, Q>,
}

impl ForestSum {
    pub fn zero() -> ForestSum {
        ForestSum::default()
    }

    pub fn unit() -> ForestSum {
        ForestSum::from_forest(Forest::empty())
    }

    pub fn from_forest(f: Forest) -> ForestSum {
        let mut terms = BTreeMap::new();
        terms.insert(f, q_one());
        ForestSum { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Forest, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, f: Forest, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(f) {
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

    pub fn add(&self, other: &ForestSum) -> ForestSum {
        let mut out = self.clone();
        for (f, c) in other.terms() {
            out.add_term(f.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ForestSum) -> ForestSum {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn scale(&self, c: &Q) -> ForestSum {
        if c.is_zero() {
            return ForestSum::zero();
        }
        ForestSum {
            terms: self.terms.iter().map(|(f, v)| (f.clone(), v * c)).collect(),
        }
    }

    /// The commutative algebra product, extended bilinearly.
    pub fn mul(&self, other: &ForestSum) -> ForestSum {
        let mut out = ForestSum::zero();
        for (f, a) in self.terms() {
            for (g, b) in other.terms() {
                out.add_term(f.mul(g), a * b);
            }
        }
        out
    }

    /// Coefficient of the empty forest.
    pub fn counit(&self) -> Q {
        self.terms.get(&Forest::empty()).cloned().unwrap_or_else(Q::zero)
    }

    /// True if every forest has degree >= 1 (element of Aug).
    pub fn in_aug(&self) -> bool {
        self.counit().is_zero()
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (f, c)) in self.terms.iter().enumerate() {
            push_signed_term(&mut out, i == 0, c, &f.to_string());
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(f, c)| {
                    serde_json::json!({"coeff": render_q(c), "forest": f.render()})
                })
                .collect(),
        )
    }
}

pub(crate) fn push_signed_term(out: &mut String, first: bool, c: &Q, body: &str) {
    use num_traits::Signed;
    let neg = c.is_negative();
    let abs = c.abs();
    if first {
        if neg {
            out.push('-');
        }
    } else if neg {
        out.push_str(" - ");
    } else {
        out.push_str(" + ");
    }
    let coeff_one = abs == q_one();
    if !coeff_one {
        out.push_str(&render_q(&abs));
        if !body.is_empty() {
            out.push(' ');
        }
    }
    if !body.is_empty() {
        out.push_str(body);
    } else if coeff_one {
        out.push('1');
    }
}

/// A finite ℚ-linear combination of forest pairs (Sweedler terms).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ForestTensorSum {
    terms: BTreeMap<(Forest, Forest), Q>,
}

impl ForestTensorSum {
    pub fn zero() -> ForestTensorSum {
        ForestTensorSum::default()
    }

    pub fn from_pair(a: Forest, b: Forest) -> ForestTensorSum {
        let mut terms = BTreeMap::new();
        terms.insert((a, b), q_one());
        ForestTensorSum { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Forest, Forest), &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: Forest, b: Forest, c: Q) {
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

    pub fn add(&self, other: &ForestTensorSum) -> ForestTensorSum {
        let mut out = self.clone();
        for ((a, b), c) in other.terms() {
            out.add_term(a.clone(), b.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Q) -> ForestTensorSum {
        if c.is_zero() {
            return ForestTensorSum::zero();
        }
        ForestTensorSum {
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Componentwise product of tensors.
    pub fn mul(&self, other: &ForestTensorSum) -> ForestTensorSum {
        let mut out = ForestTensorSum::zero();
        for ((a1, b1), c1) in self.terms() {
            for ((a2, b2), c2) in other.terms() {
                out.add_term(a1.mul(a2), b1.mul(b2), c1 * c2);
            }
        }
        out
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
}

fn coproduct_cache() -> &'static Mutex<HashMap<Tree, ForestTensorSum>> {
    static CACHE: OnceLock<Mutex<HashMap<Tree, ForestTensorSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn antipode_cache() -> &'static Mutex<HashMap<Tree, ForestSum>> {
    static CACHE: OnceLock<Mutex<HashMap<Tree, ForestSum>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn coproduct_tree(t: &Tree) -> ForestTensorSum {
    if let Some(hit) = coproduct_cache().lock().unwrap().get(t) {
        return hit.clone();
    }
    // Δ(t) = I ⊗ t + (B₊ ⊗ id) Δ(f) for t = B₊(f)
    let f = t.b_minus();
    let inner = coproduct_forest(&f);
    let mut out = ForestTensorSum::from_pair(Forest::empty(), Forest::single(t.clone()));
    for ((a, b), c) in inner.terms() {
        out.add_term(Forest::single(a.b_plus()), b.clone(), c.clone());
    }
    coproduct_cache().lock().unwrap().insert(t.clone(), out.clone());
    out
}

fn coproduct_forest(f: &Forest) -> ForestTensorSum {
    let mut out = ForestTensorSum::from_pair(Forest::empty(), Forest::empty());
    for t in f.trees() {
        out = out.mul(&coproduct_tree(t));
    }
    out
}

/// The coproduct Δ, extended linearly.
pub fn coproduct(s: &ForestSum) -> ForestTensorSum {
    let mut out = ForestTensorSum::zero();
    for (f, c) in s.terms() {
        out = out.add(&coproduct_forest(f).scale(c));
    }
    out
}

/// Δ(t) by enumeration of rooted connected vertex subsets on a labeled
/// representative; an independent cross-check of the recursive coproduct.
pub fn coproduct_oracle(t: &Tree) -> ForestTensorSum {
    let mut out = ForestTensorSum::from_pair(Forest::empty(), Forest::single(t.clone()));
    for (sub, rest) in subtree_pairs(t) {
        out.add_term(Forest::single(sub), rest, q_one());
    }
    out
}

/// All (rooted subtree t', remaining forest t \ t') pairs with embedding
/// multiplicity, the subtree always containing the root.
pub fn subtree_pairs(t: &Tree) -> Vec<(Tree, Forest)> {
    // each child is either cut off wholesale or recursed into
    let mut partial: Vec<(Vec<Tree>, Vec<Tree>)> = vec![(Vec::new(), Vec::new())];
    for child in t.children() {
        let mut options: Vec<(Option<Tree>, Vec<Tree>)> =
            vec![(None, vec![child.clone()])];
        for (sub, rest) in subtree_pairs(child) {
            options.push((Some(sub), rest.trees().to_vec()));
        }
        let mut next = Vec::new();
        for (kept, cut) in &partial {
            for (opt, rest) in &options {
                let mut kept = kept.clone();
                let mut cut = cut.clone();
                if let Some(s) = opt {
                    kept.push(s.clone());
                }
                cut.extend(rest.iter().cloned());
                next.push((kept, cut));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(kept, cut)| (Tree::new(kept), Forest::from_trees(cut)))
        .collect()
}

fn antipode_tree(t: &Tree) -> ForestSum {
    if let Some(hit) = antipode_cache().lock().unwrap().get(t) {
        return hit.clone();
    }
    // S(t) = -Σ_{(t), t'≠I} t' · S(t''), the t'=t term contributing -t
    let mut out = ForestSum::zero();
    for ((a, b), c) in coproduct_tree(t).terms() {
        if a.is_empty() {
            continue;
        }
        let tail = antipode_forest(b);
        for (g, d) in tail.terms() {
            out.add_term(a.mul(g), -(c * d));
        }
    }
    antipode_cache().lock().unwrap().insert(t.clone(), out.clone());
    out
}

fn antipode_forest(f: &Forest) -> ForestSum {
    let mut out = ForestSum::unit();
    for t in f.trees() {
        out = out.mul(&antipode_tree(t));
    }
    out
}

/// The antipode S, extended linearly.
pub fn antipode(s: &ForestSum) -> ForestSum {
    let mut out = ForestSum::zero();
    for (f, c) in s.terms() {
        out = out.add(&antipode_forest(f).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::enumerate_forests;

    fn leaf() -> Forest {
        Forest::parse("[]").unwrap()
    }

    fn ladder2() -> Forest {
        Forest::parse("[[]]").unwrap()
    }

    #[test]
    fn coproduct_of_leaf() {
        let d = coproduct(&ForestSum::from_forest(leaf()));
        let mut want = ForestTensorSum::from_pair(Forest::empty(), leaf());
        want.add_term(leaf(), Forest::empty(), q_one());
        assert_eq!(d, want);
    }

    #[test]
    fn coproduct_of_ladder2() {
        let d = coproduct(&ForestSum::from_forest(ladder2()));
        let mut want = ForestTensorSum::from_pair(Forest::empty(), ladder2());
        want.add_term(leaf(), leaf(), q_one());
        want.add_term(ladder2(), Forest::empty(), q_one());
        assert_eq!(d, want);
    }

    #[test]
    fn coproduct_of_two_vertices_has_coefficient_two() {
        let two = Forest::parse("[][]").unwrap();
        let d = coproduct(&ForestSum::from_forest(two));
        let mut want = ForestTensorSum::from_pair(Forest::empty(), Forest::parse("[][]").unwrap());
        want.add_term(leaf(), leaf(), q_int(2));
        want.add_term(Forest::parse("[][]").unwrap(), Forest::empty(), q_one());
        assert_eq!(d, want);
    }

    #[test]
    fn oracle_on_ladder3() {
        let ladder3 = Forest::parse("[[[]]]").unwrap();
        let t = &ladder3.trees()[0];
        let d = coproduct_oracle(t);
        let mut want = ForestTensorSum::from_pair(Forest::empty(), ladder3.clone());
        want.add_term(leaf(), ladder2(), q_one());
        want.add_term(ladder2(), leaf(), q_one());
        want.add_term(ladder3.clone(), Forest::empty(), q_one());
        assert_eq!(d, want);
    }

    #[test]
    fn oracle_subtraction_example() {
        // t = B₊(• · ladder₂), t' = root: contributes • ⊗ (• · ladder₂)
        let t = Forest::parse("[[][[]]]").unwrap().trees()[0].clone();
        let pairs = subtree_pairs(&t);
        let root_only: Vec<_> = pairs
            .iter()
            .filter(|(s, _)| s.degree() == 1)
            .collect();
        assert_eq!(root_only.len(), 1);
        assert_eq!(root_only[0].1, Forest::parse("[][[]]").unwrap());
    }

    #[test]
    fn antipode_examples() {
        let s = antipode(&ForestSum::from_forest(leaf()));
        assert_eq!(s, ForestSum::from_forest(leaf()).scale(&q_int(-1)));

        // S(ladder₂) = -ladder₂ + ••
        let s = antipode(&ForestSum::from_forest(ladder2()));
        let mut want = ForestSum::from_forest(ladder2()).scale(&q_int(-1));
        want.add_term(Forest::parse("[][]").unwrap(), q_one());
        assert_eq!(s, want);

        // S(••) = ••
        let two = Forest::parse("[][]").unwrap();
        assert_eq!(antipode(&ForestSum::from_forest(two.clone())), ForestSum::from_forest(two));
    }

    #[test]
    fn grading_of_sweedler_terms() {
        for f in enumerate_forests(5) {
            let d = coproduct(&ForestSum::from_forest(f.clone()));
            for ((a, b), _) in d.terms() {
                assert_eq!(a.degree() + b.degree(), f.degree());
            }
        }
    }
}
