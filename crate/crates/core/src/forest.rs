//! Rooted trees and forests in canonical (plane-structure-free) form.
//!
//! A tree is stored with its children sorted by the canonical bracket
//! encoding, ordered by (length, lexicographic).  Two trees are equal iff
//! their encodings are equal, which makes the multiset structure of forests
//! a plain sorted vector.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ForestParseError {
    #[error("unbalanced ']' at byte {0}")]
    UnbalancedClose(usize),
    #[error("unclosed '[' at byte {0}")]
    UnclosedOpen(usize),
    #[error("stray character {1:?} at byte {0}")]
    StrayChar(usize, char),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tree {
    children: Vec<Tree>,
    enc: String,
    degree: usize,
}

impl Tree {
    pub fn new(mut children: Vec<Tree>) -> Tree {
        children.sort();
        let mut enc = String::with_capacity(2 + children.iter().map(|c| c.enc.len()).sum::<usize>());
        enc.push('[');
        for c in &children {
            enc.push_str(&c.enc);
        }
        enc.push(']');
        let degree = 1 + children.iter().map(|c| c.degree).sum::<usize>();
        Tree { children, enc, degree }
    }

    /// The single-vertex tree.
    pub fn leaf() -> Tree {
        Tree::new(Vec::new())
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Canonical bracket encoding, e.g. "[[][[]]]".
    pub fn render(&self) -> &str {
        &self.enc
    }

    /// Strips the root, returning the forest of child subtrees (B₊ inverse).
    pub fn b_minus(&self) -> Forest {
        Forest::from_trees(self.children.clone())
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Tree) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tree {
    fn cmp(&self, other: &Tree) -> Ordering {
        canon_cmp(&self.enc, &other.enc)
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.enc)
    }
}

fn canon_cmp(a: &str, b: &str) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// A multiset of rooted trees.  The empty forest is the algebra unit I.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Forest {
    trees: Vec<Tree>,
}

impl Forest {
    /// The empty forest I.
    pub fn empty() -> Forest {
        Forest { trees: Vec::new() }
    }

    pub fn single(t: Tree) -> Forest {
        Forest { trees: vec![t] }
    }

    pub fn from_trees(mut trees: Vec<Tree>) -> Forest {
        trees.sort();
        Forest { trees }
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn trees(&self) -> &[Tree] {
        &self.trees
    }

    pub fn degree(&self) -> usize {
        self.trees.iter().map(|t| t.degree()).sum()
    }

    /// The commutative forest product: multiset union.
    pub fn mul(&self, other: &Forest) -> Forest {
        let mut trees = self.trees.clone();
        trees.extend(other.trees.iter().cloned());
        Forest::from_trees(trees)
    }

    /// Grafts all roots onto a common new root; B₊(I) is the single vertex.
    pub fn b_plus(&self) -> Tree {
        Tree::new(self.trees.clone())
    }

    pub fn render(&self) -> String {
        self.trees.iter().map(|t| t.render()).collect()
    }

    pub fn parse(text: &str) -> Result<Forest, ForestParseError> {
        // stack of partially built child lists; bottom entry is the toplevel forest
        let mut stack: Vec<(usize, Vec<Tree>)> = vec![(0, Vec::new())];
        for (i, ch) in text.char_indices() {
            match ch {
                '[' => stack.push((i, Vec::new())),
                ']' => {
                    let (_, children) = stack.pop().unwrap();
                    if stack.is_empty() {
                        return Err(ForestParseError::UnbalancedClose(i));
                    }
                    stack.last_mut().unwrap().1.push(Tree::new(children));
                }
                c if c.is_whitespace() => {}
                c => return Err(ForestParseError::StrayChar(i, c)),
            }
        }
        if stack.len() > 1 {
            return Err(ForestParseError::UnclosedOpen(stack.last().unwrap().0));
        }
        let (_, trees) = stack.pop().unwrap();
        Ok(Forest::from_trees(trees))
    }
}

impl PartialOrd for Forest {
    fn partial_cmp(&self, other: &Forest) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Forest {
    fn cmp(&self, other: &Forest) -> Ordering {
        canon_cmp(&self.render(), &other.render())
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("I")
        } else {
            f.write_str(&self.render())
        }
    }
}

/// All canonical rooted trees of the given degree (number of vertices),
/// in canonical order.  Degree 0 yields nothing.
pub fn trees_of_degree(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    enumerate_forests(n - 1).into_iter().map(|f| f.b_plus()).collect()
}

/// All canonical forests of total degree `n`, deterministically ordered.
pub fn enumerate_forests(n: usize) -> Vec<Forest> {
    // trees_by_deg[d] = canonical trees with d vertices, for d in 1..=n
    let mut trees_by_deg: Vec<Vec<Tree>> = vec![Vec::new()];
    let mut forests_by_deg: Vec<Vec<Forest>> = vec![vec![Forest::empty()]];
    for d in 1..=n {
        let trees: Vec<Tree> = forests_by_deg[d - 1].iter().map(|f| f.b_plus()).collect();
        trees_by_deg.push(trees);
        // multisets: pick trees in nonincreasing (degree, index) order
        let mut out = Vec::new();
        let mut stack = Vec::new();
        collect_forests(d, d, usize::MAX, &trees_by_deg, &mut stack, &mut out);
        out.sort();
        forests_by_deg.push(out);
    }
    forests_by_deg.pop().unwrap()
}

fn collect_forests(
    remaining: usize,
    max_deg: usize,
    max_idx: usize,
    trees_by_deg: &[Vec<Tree>],
    stack: &mut Vec<Tree>,
    out: &mut Vec<Forest>,
) {
    if remaining == 0 {
        out.push(Forest::from_trees(stack.clone()));
        return;
    }
    for d in (1..=remaining.min(max_deg)).rev() {
        let trees = &trees_by_deg[d];
        let start = if d == max_deg { max_idx.min(trees.len()) } else { trees.len() };
        for i in (0..start).rev() {
            stack.push(trees[i].clone());
            collect_forests(remaining - d, d, i + 1, trees_by_deg, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        assert_eq!(Forest::parse("[]").unwrap(), Forest::single(Tree::leaf()));
        // commutativity of the forest product under canonicalization
        assert_eq!(
            Forest::parse("[[]][]").unwrap(),
            Forest::parse("[][[]]").unwrap()
        );
        assert_eq!(Forest::parse("[[]][]").unwrap().render(), "[][[]]");
        // whitespace ignored
        assert_eq!(Forest::parse(" [ ] ").unwrap().render(), "[]");
    }

    #[test]
    fn parse_errors_carry_offsets() {
        assert_eq!(Forest::parse("[]]"), Err(ForestParseError::UnbalancedClose(2)));
        assert_eq!(Forest::parse("[[]"), Err(ForestParseError::UnclosedOpen(0)));
        assert_eq!(Forest::parse("[]a"), Err(ForestParseError::StrayChar(2, 'a')));
    }

    #[test]
    fn four_vertex_example_tree() {
        // B₊(• · ladder₂)
        let f = Forest::parse("[[][[]]]").unwrap();
        assert_eq!(f.degree(), 4);
        assert_eq!(f.trees().len(), 1);
    }

    #[test]
    fn b_plus_b_minus_inverse() {
        assert_eq!(Forest::empty().b_plus(), Tree::leaf());
        let two = Forest::single(Tree::leaf()).mul(&Forest::single(Tree::leaf()));
        let corolla = two.b_plus();
        assert_eq!(corolla.degree(), 3);
        assert_eq!(corolla.b_minus(), two);
        let ladder2 = Forest::single(Tree::leaf()).b_plus();
        assert_eq!(ladder2.render(), "[[]]");
    }

    #[test]
    fn forest_counts_match_rooted_tree_sequence() {
        // forests of degree n = rooted trees of degree n+1 (A000081 shifted)
        let expected = [1usize, 1, 2, 4, 9, 20, 48];
        for (n, want) in expected.iter().enumerate() {
            let forests = enumerate_forests(n);
            assert_eq!(forests.len(), *want, "degree {}", n);
            // no duplicates
            let mut seen = forests.clone();
            seen.dedup();
            assert_eq!(seen.len(), forests.len());
            for f in &forests {
                assert_eq!(f.degree(), n);
            }
        }
    }

    #[test]
    fn canonical_idempotence() {
        for f in enumerate_forests(5) {
            let reparsed = Forest::parse(&f.render()).unwrap();
            assert_eq!(reparsed, f);
            assert_eq!(reparsed.render(), f.render());
        }
    }
}
