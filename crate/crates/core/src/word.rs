//! The noncommutative polynomial algebra ℚ⟨x,y⟩: words, linear
//! combinations, concatenation, one-sided multiplication/division, and the
//! named letter maps τ, φ, σ, reversal, d₁, d, ρ.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::hopf::push_signed_term;
use crate::rational::{parse_q, q_int, q_one, render_q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    pub fn swap(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A word over {x, y}; the empty word is the algebra unit 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn one() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(ls: &[Letter]) -> Word {
        Word(ls.to_vec())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn starts_with_y(&self) -> bool {
        self.0.first() == Some(&Letter::Y)
    }

    pub fn ends_with_x(&self) -> bool {
        self.0.last() == Some(&Letter::X)
    }

    /// Membership in A¹ = ℚ + yA.
    pub fn in_a1(&self) -> bool {
        self.is_one() || self.starts_with_y()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut ls = self.0.clone();
        ls.extend_from_slice(&other.0);
        Word(ls)
    }

    pub fn render(&self) -> String {
        if self.is_one() {
            "1".to_string()
        } else {
            self.0.iter().map(|l| l.char()).collect()
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("parse error at byte {0}: {1}")]
    Parse(usize, String),
    #[error("word {0} lies outside the domain {1}")]
    Domain(String, &'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A finite ℚ-linear combination of words; no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, Q>,
}

impl WordSum {
    pub fn zero() -> WordSum {
        WordSum::default()
    }

    pub fn one() -> WordSum {
        WordSum::from_word(Word::one())
    }

    pub fn from_word(w: Word) -> WordSum {
        let mut terms = BTreeMap::new();
        terms.insert(w, q_one());
        WordSum { terms }
    }

    pub fn letter(l: Letter) -> WordSum {
        WordSum::from_word(Word(vec![l]))
    }

    /// z = x + y.
    pub fn z() -> WordSum {
        let mut s = WordSum::letter(Letter::X);
        s.add_term(Word(vec![Letter::Y]), q_one());
        s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
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

    pub fn add(&self, other: &WordSum) -> WordSum {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WordSum) -> WordSum {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn neg(&self) -> WordSum {
        self.scale(&q_int(-1))
    }

    pub fn scale(&self, c: &Q) -> WordSum {
        if c.is_zero() {
            return WordSum::zero();
        }
        WordSum {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Bilinear concatenation, the ambient ring product of A.
    pub fn concat(&self, other: &WordSum) -> WordSum {
        let mut out = WordSum::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.concat(b), ca * cb);
            }
        }
        out
    }

    /// True if every word lies in A¹ = ℚ + yA.
    pub fn in_a1(&self) -> bool {
        self.terms.keys().all(|w| w.in_a1())
    }

    /// True if every word is nonempty and starts with y.
    pub fn in_ya(&self) -> bool {
        self.terms.keys().all(|w| w.starts_with_y())
    }

    pub fn in_ax(&self) -> bool {
        self.terms.keys().all(|w| w.ends_with_x())
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let body = if w.is_one() { String::new() } else { w.render() };
            push_signed_term(&mut out, i == 0, c, &body);
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| serde_json::json!({"coeff": render_q(c), "word": w.render()}))
                .collect(),
        )
    }

    pub fn parse(text: &str) -> Result<WordSum, WordError> {
        parse_word(text)
    }
}

/// L_u(p) = u·p.
pub fn left_mul(u: &WordSum, p: &WordSum) -> WordSum {
    u.concat(p)
}

/// R_u(p) = p·u.
pub fn right_mul(p: &WordSum, u: &WordSum) -> WordSum {
    p.concat(u)
}

/// L_y⁻¹: strips the leading y from every word; domain yA.
pub fn left_div_y(p: &WordSum) -> Result<WordSum, WordError> {
    let mut out = WordSum::zero();
    for (w, c) in p.terms() {
        if !w.starts_with_y() {
            return Err(WordError::Domain(w.render(), "yA"));
        }
        out.add_term(Word(w.0[1..].to_vec()), c.clone());
    }
    Ok(out)
}

/// R_x⁻¹: strips the trailing x from every word; domain Ax.
pub fn right_div_x(p: &WordSum) -> Result<WordSum, WordError> {
    let mut out = WordSum::zero();
    for (w, c) in p.terms() {
        if !w.ends_with_x() {
            return Err(WordError::Domain(w.render(), "Ax"));
        }
        out.add_term(Word(w.0[..w.0.len() - 1].to_vec()), c.clone());
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndoMap {
    /// Anti-automorphism, τ(x) = y, τ(y) = x (MZV duality).
    Tau,
    /// Automorphism, φ(x) = z, φ(y) = -y; an involution.
    Phi,
    /// Automorphism, σ(x) = x, σ(y) = -y.
    Sigma,
    /// The anti-automorphism fixing both letters (word reversal).
    Reverse,
    /// Automorphism, d₁(x) = x, d₁(y) = z.
    D1,
    /// d(1) = 1, d(yw) = y d₁(w); domain ℚ + yA.
    D,
    /// ρ = L_y ∘ reverse ∘ L_y⁻¹ on yA, ρ(1) = 1; domain ℚ + yA.
    Rho,
}

impl EndoMap {
    pub fn name(self) -> &'static str {
        match self {
            EndoMap::Tau => "tau",
            EndoMap::Phi => "phi",
            EndoMap::Sigma => "sigma",
            EndoMap::Reverse => "reverse",
            EndoMap::D1 => "d1",
            EndoMap::D => "d",
            EndoMap::Rho => "rho",
        }
    }
}

impl std::str::FromStr for EndoMap {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "tau" => EndoMap::Tau,
            "phi" => EndoMap::Phi,
            "sigma" => EndoMap::Sigma,
            "reverse" | "eps" | "epsilon" => EndoMap::Reverse,
            "d1" => EndoMap::D1,
            "d" => EndoMap::D,
            "rho" => EndoMap::Rho,
            other => return Err(format!("unknown map {:?}", other)),
        })
    }
}

fn image_of_letter(m: EndoMap, l: Letter) -> WordSum {
    match (m, l) {
        (EndoMap::Tau, Letter::X) => WordSum::letter(Letter::Y),
        (EndoMap::Tau, Letter::Y) => WordSum::letter(Letter::X),
        (EndoMap::Phi, Letter::X) => WordSum::z(),
        (EndoMap::Phi, Letter::Y) => WordSum::letter(Letter::Y).neg(),
        (EndoMap::Sigma, Letter::X) => WordSum::letter(Letter::X),
        (EndoMap::Sigma, Letter::Y) => WordSum::letter(Letter::Y).neg(),
        (EndoMap::Reverse, l) => WordSum::letter(l),
        (EndoMap::D1, Letter::X) => WordSum::letter(Letter::X),
        (EndoMap::D1, Letter::Y) => WordSum::z(),
        _ => unreachable!("non-letterwise map"),
    }
}

/// Applies one of the named maps; d and ρ require their argument in ℚ + yA.
pub fn endo_map(m: EndoMap, p: &WordSum) -> Result<WordSum, WordError> {
    match m {
        EndoMap::Tau | EndoMap::Phi | EndoMap::Sigma | EndoMap::Reverse | EndoMap::D1 => {
            let mut out = WordSum::zero();
            for (w, c) in p.terms() {
                let mut img = WordSum::one();
                match m {
                    // anti-automorphisms reverse the letter order
                    EndoMap::Tau | EndoMap::Reverse => {
                        for &l in w.0.iter().rev() {
                            img = img.concat(&image_of_letter(m, l));
                        }
                    }
                    _ => {
                        for &l in w.0.iter() {
                            img = img.concat(&image_of_letter(m, l));
                        }
                    }
                }
                out = out.add(&img.scale(c));
            }
            Ok(out)
        }
        EndoMap::D => {
            let mut out = WordSum::zero();
            for (w, c) in p.terms() {
                if w.is_one() {
                    out.add_term(Word::one(), c.clone());
                } else if w.starts_with_y() {
                    let tail = WordSum::from_word(Word(w.0[1..].to_vec()));
                    let img = endo_map(EndoMap::D1, &tail)?;
                    out = out.add(&left_mul(&WordSum::letter(Letter::Y), &img).scale(c));
                } else {
                    return Err(WordError::Domain(w.render(), "Q + yA"));
                }
            }
            Ok(out)
        }
        EndoMap::Rho => {
            let mut out = WordSum::zero();
            for (w, c) in p.terms() {
                if w.is_one() {
                    out.add_term(Word::one(), c.clone());
                } else if w.starts_with_y() {
                    let mut rev = w.0[1..].to_vec();
                    rev.reverse();
                    let mut ls = vec![Letter::Y];
                    ls.extend(rev);
                    out.add_term(Word(ls), c.clone());
                } else {
                    return Err(WordError::Domain(w.render(), "Q + yA"));
                }
            }
            Ok(out)
        }
    }
}

/// Parses a signed sum of terms "[±][p/q] letterstring" over {x, y, z, 1};
/// z expands to x + y.
pub fn parse_word(text: &str) -> Result<WordSum, WordError> {
    let bytes = text.as_bytes();
    let mut i = 0usize;
    let n = bytes.len();
    let mut out = WordSum::zero();
    let mut any = false;
    let mut pending_sign: Option<i64> = None;

    while i < n {
        while i < n && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= n {
            break;
        }
        let mut sign = pending_sign.take().unwrap_or(1);
        match bytes[i] {
            b'+' => {
                i += 1;
            }
            b'-' => {
                sign = -sign;
                i += 1;
            }
            _ => {
                if any {
                    return Err(WordError::Parse(i, "expected '+' or '-'".into()));
                }
            }
        }
        while i < n && bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        if i >= n {
            return Err(WordError::Parse(i, "dangling sign".into()));
        }
        // optional rational coefficient
        let mut coeff = q_int(sign);
        let start = i;
        if bytes[i].is_ascii_digit() {
            let mut j = i;
            while j < n && bytes[j].is_ascii_digit() {
                j += 1;
            }
            let mut end = j;
            if j < n && bytes[j] == b'/' {
                let mut k = j + 1;
                while k < n && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                if k == j + 1 {
                    return Err(WordError::Parse(j, "expected denominator digits".into()));
                }
                end = k;
            }
            let lit = &text[start..end];
            let q = parse_q(lit)
                .ok_or_else(|| WordError::Parse(start, format!("bad rational {:?}", lit)))?;
            coeff = coeff * q;
            i = end;
            while i < n && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            // A bare number is the coefficient of the empty word unless
            // "1" is immediately followed by letters (no such tokens exist,
            // digits never start a letterstring).
            if i >= n || bytes[i] == b'+' || bytes[i] == b'-' {
                out.add_term(Word::one(), coeff);
                any = true;
                continue;
            }
        }
        // letterstring over x, y, z, or the unit token '1'
        if bytes[i] == b'1' {
            i += 1;
            out.add_term(Word::one(), coeff);
            any = true;
            continue;
        }
        let mut factor = WordSum::one();
        let mut consumed = false;
        while i < n {
            let ws = match bytes[i] {
                b'x' => WordSum::letter(Letter::X),
                b'y' => WordSum::letter(Letter::Y),
                b'z' => WordSum::z(),
                _ => break,
            };
            factor = factor.concat(&ws);
            i += 1;
            consumed = true;
        }
        if !consumed {
            return Err(WordError::Parse(
                i,
                format!("illegal character {:?}", text[i..].chars().next().unwrap()),
            ));
        }
        out = out.add(&factor.scale(&coeff));
        any = true;
    }
    if !any {
        return Err(WordError::Parse(0, "empty input".into()));
    }
    Ok(out)
}

/// All words over {x, y} of the exact given degree, in canonical order.
pub fn words_of_degree(n: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for bits in 0..(1usize << n) {
        let ls: Vec<Letter> = (0..n)
            .map(|i| if bits >> (n - 1 - i) & 1 == 0 { Letter::X } else { Letter::Y })
            .collect();
        out.push(Word(ls));
    }
    out.sort();
    out
}

/// All words of degree <= n, including the empty word.
pub fn words_up_to(n: usize) -> Vec<Word> {
    (0..=n).flat_map(words_of_degree).collect()
}

/// All A¹ words (empty or starting with y) of the exact given degree.
pub fn a1_words_of_degree(n: usize) -> Vec<Word> {
    if n == 0 {
        return vec![Word::one()];
    }
    words_of_degree(n).into_iter().filter(|w| w.starts_with_y()).collect()
}
