//! Multiple zeta values: index/word translation, relation generation from
//! rooted tree maps and duality, and two independent numeric evaluators
//! (a Hölder-convolution series at 1/2 and a truncated direct sum).

use std::collections::HashMap;
use std::sync::Mutex;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::harmonic::{blocks_word, word_blocks};
use crate::hopf::ForestSum;
use crate::rational::{q_int, q_to_f64, render_q, Q};
use crate::rtm::rtm_apply;
use crate::word::{endo_map, EndoMap, Word, WordSum};

#[derive(Debug, Error, PartialEq)]
pub enum MzvError {
    #[error("word {0} lies outside yAx")]
    NotYax(String),
    #[error("index {0:?} is not admissible (last part must be >= 2)")]
    Divergent(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A composition (k₁,…,k_r) naming ζ(k₁,…,k_r) = Σ_{0<n₁<⋯<n_r} Π n_i^{-k_i}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    parts: Vec<usize>,
}

impl Index {
    pub fn new(parts: Vec<usize>) -> Option<Index> {
        if parts.is_empty() || parts.iter().any(|&k| k == 0) {
            return None;
        }
        Some(Index { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    /// Convergent iff the last part is >= 2, equivalently the associated
    /// word ends in x.
    pub fn admissible(&self) -> bool {
        *self.parts.last().unwrap() >= 2
    }

    /// Accepts "1,2", "(1,2)", "1 2".
    pub fn parse(text: &str) -> Option<Index> {
        let cleaned = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts: Option<Vec<usize>> = cleaned
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().ok().filter(|&k| k > 0))
            .collect();
        Index::new(parts?)
    }

    pub fn render(&self) -> String {
        let inner: Vec<String> = self.parts.iter().map(|k| k.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl std::fmt::Display for Index {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// yx^{k₁-1}⋯yx^{k_r-1} ↦ (k₁,…,k_r); the word must lie in yAx.
pub fn word_index(w: &Word) -> Result<Index, MzvError> {
    if !w.starts_with_y() {
        return Err(MzvError::NotYax(w.render()));
    }
    let blocks = word_blocks(w).unwrap();
    if !w.ends_with_x() {
        return Err(MzvError::NotYax(w.render()));
    }
    Ok(Index { parts: blocks })
}

pub fn index_word(i: &Index) -> Word {
    blocks_word(&i.parts)
}

/// Where a relation came from.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Provenance {
    Rtm { forest: String, seed: String },
    Duality { word: String },
}

/// A word-sum combination claimed to vanish under the zeta evaluation.
#[derive(Clone, Debug)]
pub struct Relation {
    pub lhs: WordSum,
    pub provenance: Provenance,
}

impl Relation {
    pub fn to_json(&self, numeric_residual: Option<f64>) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .lhs
            .terms()
            .map(|(w, c)| {
                let idx = word_index(w).expect("relation terms are admissible");
                serde_json::json!({"coeff": render_q(c), "index": idx.parts()})
            })
            .collect();
        serde_json::json!({
            "provenance": serde_json::to_value(&self.provenance).unwrap(),
            "terms": terms,
            "numeric_residual": numeric_residual,
        })
    }
}

/// Applies f̃ to an admissible seed word; requires counit(f) = 0.
pub fn relation_from_rtm(f: &ForestSum, w: &Word) -> Result<Relation, MzvError> {
    if !f.counit().is_zero() {
        return Err(MzvError::Precondition("forest sum must lie in Aug".into()));
    }
    let idx = word_index(w)?;
    if !idx.admissible() {
        return Err(MzvError::Divergent(idx.parts.clone()));
    }
    let lhs = rtm_apply(f, &WordSum::from_word(w.clone()));
    for (term, _) in lhs.terms() {
        let ti = word_index(term)?;
        if !ti.admissible() {
            return Err(MzvError::Divergent(ti.parts.clone()));
        }
    }
    Ok(Relation {
        lhs,
        provenance: Provenance::Rtm {
            forest: format!("{}", f.render()),
            seed: w.render(),
        },
    })
}

/// w - τ(w); the zero polynomial for self-dual words.
pub fn duality_relation(w: &Word) -> Result<Relation, MzvError> {
    let idx = word_index(w)?;
    if !idx.admissible() {
        return Err(MzvError::Divergent(idx.parts.clone()));
    }
    let s = WordSum::from_word(w.clone());
    let lhs = s.sub(&endo_map(EndoMap::Tau, &s).unwrap());
    Ok(Relation {
        lhs,
        provenance: Provenance::Duality { word: w.render() },
    })
}

/// Partial sum over n_r <= N together with an elementary tail bound of
/// shape C·(log N)^{r-1}/N^{k_r-1}.
pub fn zeta_truncated(i: &Index, n_max: usize) -> Result<(f64, f64), MzvError> {
    if !i.admissible() {
        return Err(MzvError::Divergent(i.parts.clone()));
    }
    assert!(n_max >= 10, "cutoff too small");
    let r = i.depth();
    // level sums: s_j(m) = Σ_{n<=m} s_{j-1}(n-1)/n^{k_j}, s_0 = 1
    let mut prev = vec![1.0f64; n_max + 1];
    for &k in &i.parts {
        let mut cur = vec![0.0f64; n_max + 1];
        for n in 1..=n_max {
            cur[n] = cur[n - 1] + prev[n - 1] / (n as f64).powi(k as i32);
        }
        prev = cur;
    }
    let value = prev[n_max];
    // tail <= (1/m!) ∫_N^∞ (1+ln t)^m / t^k dt with m = r-1, k = k_r
    let k = *i.parts.last().unwrap();
    let m = r - 1;
    let a = 1.0 + (n_max as f64).ln();
    let mut integral = 0.0f64;
    let mut binom = 1.0f64;
    let mut fact_i = 1.0f64;
    for idx in 0..=m {
        if idx > 0 {
            binom = binom * ((m - idx + 1) as f64) / (idx as f64);
            fact_i *= idx as f64;
        }
        integral += binom * a.powi((m - idx) as i32) * fact_i
            / ((k - 1) as f64).powi(idx as i32 + 1);
    }
    let mut m_fact = 1.0f64;
    for j in 2..=m {
        m_fact *= j as f64;
    }
    let bound = integral * (n_max as f64).powi(1 - k as i32) / m_fact;
    Ok((value, bound))
}

// ---------------------------------------------------------------------------
// Hölder-convolution evaluator.
//
// The index is turned into an iterated-integral word over two symbols
// (0 = dt/t, 1 = dt/(1-t)): ζ(k₁,…,k_r) = I(0^{k_r-1}1 ⋯ 0^{k₁-1}1) over
// the simplex 1 > t_1 > ⋯ > t_n > 0.  Splitting every variable at 1/2
// factors the integral through multiple polylogarithms at 1/2:
//   ζ = Σ_{prefix·suffix} Z(swap+reverse(prefix)) · Z(suffix),
// each factor a geometrically convergent series truncated at `terms`
// coefficients.  All series arithmetic is exact rational; rounding happens
// once at the end.

fn integral_word(i: &Index) -> Vec<u8> {
    let mut out = Vec::with_capacity(i.weight());
    for &k in i.parts.iter().rev() {
        out.extend(std::iter::repeat(0u8).take(k - 1));
        out.push(1u8);
    }
    out
}

/// Block sizes s_1..s_j of a 0/1 word ending in 1: each block is a run of
/// zeros plus its closing 1.
fn polylog_blocks(v: &[u8]) -> Vec<usize> {
    let mut blocks = Vec::new();
    let mut run = 0usize;
    for &b in v {
        if b == 0 {
            run += 1;
        } else {
            blocks.push(run + 1);
            run = 0;
        }
    }
    debug_assert_eq!(run, 0, "polylog word must end in 1");
    blocks
}

fn polylog_cache() -> &'static Mutex<HashMap<(Vec<usize>, usize), Q>> {
    static CACHE: OnceLock<Mutex<HashMap<(Vec<usize>, usize), Q>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Li_{s_1,…,s_j}(1/2) = Σ_{n_1>⋯>n_j>=1} 2^{-n_1} Π n_i^{-s_i}, truncated
/// at n_1 <= terms; exact rational.
fn polylog_half(blocks: &[usize], terms: usize) -> Q {
    if blocks.is_empty() {
        return q_int(1);
    }
    let key = (blocks.to_vec(), terms);
    if let Some(hit) = polylog_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    fn inv_pow(n: usize, s: usize) -> Q {
        let mut d = num_bigint::BigInt::from(1);
        for _ in 0..s {
            d *= n;
        }
        Q::new(1.into(), d)
    }
    // inner(m) = Σ_{m>=n_2>⋯>n_j} Π n_i^{-s_i}, built level by level
    let mut inner = vec![q_int(1); terms + 1];
    for &s in blocks[1..].iter().rev() {
        let mut cur = vec![Q::zero(); terms + 1];
        for n in 1..=terms {
            cur[n] = cur[n - 1].clone() + inner[n - 1].clone() * inv_pow(n, s);
        }
        inner = cur;
    }
    let s1 = blocks[0];
    let half = Q::new(1.into(), 2.into());
    let mut pow_half = q_int(1);
    let mut acc = Q::zero();
    for n in 1..=terms {
        pow_half = pow_half * half.clone();
        acc = acc + pow_half.clone() * inner[n - 1].clone() * inv_pow(n, s1);
    }
    polylog_cache().lock().unwrap().insert(key, acc.clone());
    acc
}

fn zeta_exact(i: &Index, terms: usize) -> Q {
    let w = integral_word(i);
    let n = w.len();
    let mut total = Q::zero();
    for split in 0..=n {
        let suffix = &w[split..];
        let prefix: Vec<u8> = w[..split].iter().rev().map(|&b| 1 - b).collect();
        // both factors end in 1 by admissibility
        let a = polylog_half(&polylog_blocks(suffix), terms);
        let b = polylog_half(&polylog_blocks(&prefix), terms);
        total = total + a * b;
    }
    total
}

fn zeta_value_cache() -> &'static Mutex<HashMap<(Index, usize), f64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Index, usize), f64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

pub const DEFAULT_TERMS: usize = 96;
pub const DEFAULT_TOL: f64 = 1e-8;

/// ζ(k₁,…,k_r) by Hölder convolution, truncating every series factor at
/// `terms` coefficients; the tail is bounded by a constant times 2^{-terms}.
pub fn zeta_numeric(i: &Index, terms: usize) -> Result<f64, MzvError> {
    if !i.admissible() {
        return Err(MzvError::Divergent(i.parts.clone()));
    }
    assert!(terms >= 16, "terms too small");
    let key = (i.clone(), terms);
    if let Some(hit) = zeta_value_cache().lock().unwrap().get(&key) {
        return Ok(*hit);
    }
    let value = q_to_f64(&zeta_exact(i, terms));
    zeta_value_cache().lock().unwrap().insert(key, value);
    Ok(value)
}

/// |Σ coeff·ζ(index)| < tol, summed left to right over the canonical term
/// order; returns the residual alongside.
pub fn verify_relation_numeric(
    r: &Relation,
    tol: f64,
    terms: usize,
) -> Result<(bool, f64), MzvError> {
    let mut residual = 0.0f64;
    for (w, c) in r.lhs.terms() {
        let idx = word_index(w)?;
        residual += q_to_f64(c) * zeta_numeric(&idx, terms)?;
    }
    Ok((residual.abs() < tol, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forest::Forest;
    use crate::word::parse_word;

    fn w(s: &str) -> Word {
        let sum = parse_word(s).unwrap();
        let word = sum.terms().next().unwrap().0.clone();
        word
    }

    fn idx(parts: &[usize]) -> Index {
        Index::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn word_index_roundtrip() {
        assert_eq!(word_index(&w("yx")).unwrap(), idx(&[2]));
        assert_eq!(word_index(&w("yyx")).unwrap(), idx(&[1, 2]));
        assert_eq!(index_word(&idx(&[1, 3, 2])), w("yyxxyx"));
        assert!(word_index(&w("xy")).is_err());
        for parts in [vec![2], vec![1, 2], vec![3, 1, 2]] {
            let i = idx(&parts);
            assert_eq!(word_index(&index_word(&i)).unwrap(), i);
        }
    }

    #[test]
    fn zeta2_matches_pi_squared_over_six() {
        let v = zeta_numeric(&idx(&[2]), 96).unwrap();
        assert!((v - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12, "{}", v);
        // truncated oracle brackets it
        let (t, bound) = zeta_truncated(&idx(&[2]), 10_000).unwrap();
        assert!(bound < 2e-4);
        assert!((v - t).abs() <= bound, "v={} t={} bound={}", v, t, bound);
    }

    #[test]
    fn zeta3_and_euler_identity() {
        let z3 = zeta_numeric(&idx(&[3]), 96).unwrap();
        assert!((z3 - 1.2020569031595942).abs() < 1e-12, "{}", z3);
        let z12 = zeta_numeric(&idx(&[1, 2]), 96).unwrap();
        assert!((z12 - z3).abs() < 1e-10);
    }

    #[test]
    fn truncated_oracle_consistency() {
        // ζ(2,2) = π⁴/120 as an external sanity anchor
        let (v, bound) = zeta_truncated(&idx(&[2, 2]), 2000).unwrap();
        let closed = std::f64::consts::PI.powi(4) / 120.0;
        assert!((v - closed).abs() <= bound, "v={} bound={}", v, bound);
        // (1,2) within bound of the fast evaluator's (3)
        let (v, bound) = zeta_truncated(&idx(&[1, 2]), 2000).unwrap();
        let z3 = zeta_numeric(&idx(&[3]), 96).unwrap();
        assert!((v - z3).abs() <= bound);
        // monotone in N
        let (v1, _) = zeta_truncated(&idx(&[2]), 100).unwrap();
        let (v2, _) = zeta_truncated(&idx(&[2]), 200).unwrap();
        assert!(v2 > v1);
    }

    #[test]
    fn doubling_terms_is_geometric() {
        for parts in [vec![2], vec![1, 2], vec![2, 1, 2]] {
            let i = idx(&parts);
            let a = zeta_numeric(&i, 32).unwrap();
            let b = zeta_numeric(&i, 64).unwrap();
            assert!((a - b).abs() < 2f64.powi(-32 + 2), "{:?}", parts);
        }
    }

    #[test]
    fn euler_relation_from_rtm() {
        let dot = ForestSum::from_forest(Forest::parse("[]").unwrap());
        let r = relation_from_rtm(&dot, &w("yx")).unwrap();
        assert_eq!(r.lhs, parse_word("yyx - yxx").unwrap());
        let (ok, residual) = verify_relation_numeric(&r, 1e-8, 96).unwrap();
        assert!(ok, "residual {}", residual);
    }

    #[test]
    fn duality_examples() {
        assert!(duality_relation(&w("yx")).unwrap().lhs.is_zero());
        assert_eq!(
            duality_relation(&w("yxx")).unwrap().lhs,
            parse_word("yxx - yyx").unwrap()
        );
        assert!(duality_relation(&w("yxyx")).unwrap().lhs.is_zero());
    }

    #[test]
    fn corrupted_relation_fails() {
        let r = Relation {
            lhs: parse_word("yyx - 2yxx").unwrap(),
            provenance: Provenance::Duality { word: "corrupted".into() },
        };
        let (ok, residual) = verify_relation_numeric(&r, 1e-8, 96).unwrap();
        assert!(!ok);
        let z3 = zeta_numeric(&idx(&[3]), 96).unwrap();
        assert!((residual.abs() - z3).abs() < 1e-8);
    }

    #[test]
    fn divergent_rejected() {
        assert!(zeta_numeric(&idx(&[2, 1]), 96).is_err());
        assert!(duality_relation(&w("yxy")).is_err());
    }
}
