//! Executable identity checks: every theorem, proposition and lemma the
//! crate implements is re-verified here by comparing two independent
//! computation routes over exhaustively enumerated inputs.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::forest::{enumerate_forests, trees_of_degree, Forest};
use crate::harmonic::{
    b_membership, blocks_word, d_rho_closed, diamond, harub, m_contract, pq_definitional,
    pq_of_u, solve_on_u_basis, star, tensor_star, u_map, word_blocks, PqMap, WordTensorSum,
};
use crate::hopf::{antipode, coproduct, coproduct_oracle, ForestSum};
use crate::rational::Q;
use crate::rtm::{f_poly, g_poly, rtm_apply, rtm_letter};
use crate::word::{
    a1_words_of_degree, endo_map, left_div_y, right_div_x, words_of_degree, words_up_to,
    EndoMap, Letter, Word, WordSum,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub max_forest_degree: usize,
    pub max_word_length: usize,
    pub random_cases: usize,
}

impl Bounds {
    pub fn new(max_forest_degree: usize, max_word_length: usize) -> Bounds {
        Bounds { max_forest_degree, max_word_length, random_cases: 0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub bounds: Bounds,
    pub status: Status,
    pub counterexample: Option<serde_json::Value>,
    pub checked: u64,
    pub millis: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityName {
    Coassoc,
    CopOracle,
    AntipodeAxiom,
    Thm1,
    Thm2,
    Cor,
    Thm3,
    LemZ,
    PropKey,
    LemPq,
    PropB,
    PropFg0,
    PropFs,
    LemTau,
    OpEq3,
    FactorOrder,
    Eq1,
    LemD,
    PhiDiamond,
    LemY,
    LemU,
    Eq963,
    LemIm,
    MUZero,
    ProdLaws,
    RtmImage,
}

impl IdentityName {
    pub fn all() -> Vec<IdentityName> {
        use IdentityName::*;
        vec![
            Coassoc, CopOracle, AntipodeAxiom, Thm1, Thm2, Cor, Thm3, LemZ, PropKey, LemPq,
            PropB, PropFg0, PropFs, LemTau, OpEq3, FactorOrder, Eq1, LemD, PhiDiamond, LemY,
            LemU, Eq963, LemIm, MUZero, ProdLaws, RtmImage,
        ]
    }

    pub fn name(self) -> &'static str {
        use IdentityName::*;
        match self {
            Coassoc => "coassoc",
            CopOracle => "cop_oracle",
            AntipodeAxiom => "antipode_axiom",
            Thm1 => "thm1",
            Thm2 => "thm2",
            Cor => "cor",
            Thm3 => "thm3",
            LemZ => "lem_z",
            PropKey => "prop_key",
            LemPq => "lem_pq",
            PropB => "prop_b",
            PropFg0 => "prop_fg0",
            PropFs => "prop_fs",
            LemTau => "lem_tau",
            OpEq3 => "op_eq3",
            FactorOrder => "factor_order",
            Eq1 => "eq1",
            LemD => "lem_d",
            PhiDiamond => "phi_diamond",
            LemY => "lem_y",
            LemU => "lem_u",
            Eq963 => "eq963",
            LemIm => "lem_im",
            MUZero => "m_u_zero",
            ProdLaws => "prod_laws",
            RtmImage => "rtm_image",
        }
    }

    /// The default grid each identity is verified on.
    pub fn default_bounds(self) -> Bounds {
        use IdentityName::*;
        match self {
            Coassoc | AntipodeAxiom => Bounds::new(5, 0),
            CopOracle => Bounds::new(6, 0),
            Thm1 | Thm2 => Bounds { max_forest_degree: 4, max_word_length: 4, random_cases: 200 },
            Cor => Bounds::new(5, 0),
            Thm3 => Bounds::new(3, 4),
            LemZ => Bounds::new(3, 3),
            PropKey => Bounds::new(3, 2),
            LemPq | PropB => Bounds::new(4, 0),
            PropFg0 | PropFs => Bounds::new(5, 0),
            LemTau => Bounds::new(0, 3),
            OpEq3 => Bounds::new(0, 6),
            FactorOrder => Bounds::new(4, 2),
            Eq1 => Bounds::new(0, 6),
            LemD | LemU => Bounds::new(0, 5),
            PhiDiamond => Bounds::new(0, 5),
            LemY => Bounds::new(0, 3),
            Eq963 | MUZero => Bounds::new(0, 6),
            LemIm => Bounds::new(0, 5),
            ProdLaws => Bounds::new(0, 5),
            RtmImage => Bounds::new(6, 0),
        }
    }
}

impl std::fmt::Display for IdentityName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for IdentityName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        IdentityName::all()
            .into_iter()
            .find(|n| n.name() == lower)
            .ok_or_else(|| format!("unknown identity {:?}", s))
    }
}

fn forests_up_to(n: usize) -> Vec<Forest> {
    (0..=n).flat_map(enumerate_forests).collect()
}

fn nonempty_forests_up_to(n: usize) -> Vec<Forest> {
    (1..=n).flat_map(enumerate_forests).collect()
}

fn sweep<T, F>(cases: Vec<T>, check: F) -> (u64, Option<serde_json::Value>)
where
    T: Send + Sync,
    F: Fn(&T) -> Option<serde_json::Value> + Send + Sync,
{
    let results: Vec<Option<serde_json::Value>> = cases.par_iter().map(&check).collect();
    let checked = results.len() as u64;
    (checked, results.into_iter().flatten().next())
}

fn case(desc: String) -> Option<serde_json::Value> {
    Some(serde_json::json!({ "case": desc }))
}

fn sum(w: &Word) -> WordSum {
    WordSum::from_word(w.clone())
}

fn forest_sum(f: &Forest) -> ForestSum {
    ForestSum::from_forest(f.clone())
}

fn append_x(p: &WordSum) -> WordSum {
    p.concat(&WordSum::letter(Letter::X))
}

fn tau(p: &WordSum) -> WordSum {
    endo_map(EndoMap::Tau, p).unwrap()
}

fn phi(p: &WordSum) -> WordSum {
    endo_map(EndoMap::Phi, p).unwrap()
}

/// Runs one identity sweep and reports the first counterexample, if any.
pub fn verify_identity(name: IdentityName, bounds: Bounds) -> VerificationReport {
    let start = Instant::now();
    let (checked, counterexample) = run(name, bounds);
    VerificationReport {
        identity: name.name().to_string(),
        bounds,
        status: if counterexample.is_none() { Status::Pass } else { Status::Fail },
        counterexample,
        checked,
        millis: start.elapsed().as_millis(),
    }
}

/// The full suite at default bounds, in a fixed order.
pub fn verify_all() -> Vec<VerificationReport> {
    IdentityName::all()
        .into_iter()
        .map(|n| verify_identity(n, n.default_bounds()))
        .collect()
}

fn run(name: IdentityName, b: Bounds) -> (u64, Option<serde_json::Value>) {
    match name {
        IdentityName::Coassoc => check_coassoc(b),
        IdentityName::CopOracle => check_cop_oracle(b),
        IdentityName::AntipodeAxiom => check_antipode_axiom(b),
        IdentityName::Thm1 => check_thm1(b),
        IdentityName::Thm2 => check_thm2(b),
        IdentityName::Cor => check_cor(b),
        IdentityName::Thm3 => check_thm3(b),
        IdentityName::LemZ => check_lem_z(b),
        IdentityName::PropKey => check_prop_key(b),
        IdentityName::LemPq => check_lem_pq(b),
        IdentityName::PropB => check_prop_b(b),
        IdentityName::PropFg0 => check_prop_fg0(b),
        IdentityName::PropFs => check_prop_fs(b),
        IdentityName::LemTau => check_lem_tau(b),
        IdentityName::OpEq3 => check_op_eq3(b),
        IdentityName::FactorOrder => check_factor_order(b),
        IdentityName::Eq1 => check_eq1(b),
        IdentityName::LemD => check_lem_d(b),
        IdentityName::PhiDiamond => check_phi_diamond(b),
        IdentityName::LemY => check_lem_y(b),
        IdentityName::LemU => check_lem_u(b),
        IdentityName::Eq963 => check_eq963(b),
        IdentityName::LemIm => check_lem_im(b),
        IdentityName::MUZero => check_m_u_zero(b),
        IdentityName::ProdLaws => check_prod_laws(b),
        IdentityName::RtmImage => check_rtm_image(b),
    }
}

fn check_coassoc(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forests_up_to(b.max_forest_degree), |f| {
        let d = coproduct(&forest_sum(f));
        let mut left: BTreeMap<(Forest, Forest, Forest), Q> = BTreeMap::new();
        let mut right: BTreeMap<(Forest, Forest, Forest), Q> = BTreeMap::new();
        for ((a, c), q) in d.terms() {
            for ((a1, a2), q2) in coproduct(&forest_sum(a)).terms() {
                add3(&mut left, (a1.clone(), a2.clone(), c.clone()), q * q2);
            }
            for ((c1, c2), q2) in coproduct(&forest_sum(c)).terms() {
                add3(&mut right, (a.clone(), c1.clone(), c2.clone()), q * q2);
            }
        }
        (left != right).then(|| case(format!("coassociativity fails for {}", f))).flatten()
    })
}

fn add3(map: &mut BTreeMap<(Forest, Forest, Forest), Q>, key: (Forest, Forest, Forest), v: Q) {
    if v.is_zero() {
        return;
    }
    let e = map.entry(key).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        map.retain(|_, q| !q.is_zero());
    }
}

fn check_cop_oracle(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let trees: Vec<_> = (1..=b.max_forest_degree).flat_map(trees_of_degree).collect();
    sweep(trees, |t| {
        let rec = coproduct(&ForestSum::from_forest(Forest::single(t.clone())));
        let oracle = coproduct_oracle(t);
        (rec != oracle).then(|| case(format!("coproduct mismatch for tree {}", t))).flatten()
    })
}

fn check_antipode_axiom(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forests_up_to(b.max_forest_degree), |f| {
        let fs = forest_sum(f);
        let expected = ForestSum::unit().scale(&fs.counit());
        let mut left = ForestSum::zero();
        let mut right = ForestSum::zero();
        for ((a, c), q) in coproduct(&fs).terms() {
            left = left.add(&antipode(&forest_sum(a)).mul(&forest_sum(c)).scale(q));
            right = right.add(&forest_sum(a).mul(&antipode(&forest_sum(c))).scale(q));
        }
        (left != expected || right != expected)
            .then(|| case(format!("antipode axiom fails for {}", f)))
            .flatten()
    })
}

fn random_cases(b: Bounds) -> Vec<(Forest, Word)> {
    if b.random_cases == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let pool5 = enumerate_forests(5);
    let pool6 = enumerate_forests(6);
    let mut out = Vec::with_capacity(b.random_cases);
    for _ in 0..b.random_cases {
        let f = if rng.gen_bool(0.5) {
            pool5.choose(&mut rng).unwrap().clone()
        } else {
            pool6.choose(&mut rng).unwrap().clone()
        };
        let len = rng.gen_range(0..=5usize);
        let w = Word(
            (0..len)
                .map(|_| if rng.gen_bool(0.5) { Letter::X } else { Letter::Y })
                .collect(),
        );
        out.push((f, w));
    }
    out
}

fn forest_word_grid(b: Bounds) -> Vec<(Forest, Word)> {
    let mut cases: Vec<(Forest, Word)> = Vec::new();
    for f in forests_up_to(b.max_forest_degree) {
        for w in words_up_to(b.max_word_length) {
            cases.push((f.clone(), w));
        }
    }
    cases.extend(random_cases(b));
    cases
}

fn check_thm1(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forest_word_grid(b), |(f, w)| {
        let fs = forest_sum(f);
        let lhs = rtm_apply(&fs, &append_x(&sum(w)));
        let rhs = append_x(&diamond(&f_poly(&fs), &sum(w)));
        if lhs != rhs {
            return case(format!("f={} w={}: f~(wx) != (F_f <> w)x", f, w));
        }
        // image closure: always in Ax, and in yAx for w ∈ yA
        if !lhs.in_ax() || (w.starts_with_y() && !f.is_empty() && !lhs.in_ya()) {
            return case(format!("f={} w={}: image leaves (y)Ax", f, w));
        }
        None
    })
}

fn check_thm2(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forest_word_grid(b), |(f, w)| {
        let fs = forest_sum(f);
        let lhs = rtm_apply(&antipode(&fs), &append_x(&sum(w)));
        let rhs = append_x(&diamond(&g_poly(&fs), &sum(w)));
        (lhs != rhs)
            .then(|| case(format!("f={} w={}: S(f)~(wx) != (G_f <> w)x", f, w)))
            .flatten()
    })
}

fn check_cor(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forests_up_to(b.max_forest_degree), |f| {
        let fs = forest_sum(f);
        (g_poly(&fs) != f_poly(&antipode(&fs)))
            .then(|| case(format!("G != F∘S for {}", f)))
            .flatten()
    })
}

fn check_thm3(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forest_word_grid(b), |(f, w)| {
        let fs = forest_sum(f);
        let lhs = rtm_apply(&antipode(&fs), &sum(w));
        let rhs = tau(&rtm_apply(&fs, &tau(&sum(w))));
        (lhs != rhs)
            .then(|| case(format!("f={} w={}: S(f)~ != tau f~ tau", f, w)))
            .flatten()
    })
}

fn check_lem_z(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(forest_word_grid(b), |(f, w)| {
        let fs = forest_sum(f);
        let z = WordSum::z();
        let fw = rtm_apply(&fs, &sum(w));
        let left_ok = rtm_apply(&fs, &z.concat(&sum(w))) == z.concat(&fw);
        let right_ok = rtm_apply(&fs, &sum(w).concat(&z)) == fw.concat(&z);
        (!left_ok || !right_ok)
            .then(|| case(format!("f={} w={}: z does not slide through f~", f, w)))
            .flatten()
    })
}

fn check_prop_key(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let words = words_up_to(b.max_word_length);
    let mut cases = Vec::new();
    for f in forests_up_to(b.max_forest_degree) {
        for w1 in &words {
            for w2 in &words {
                cases.push((f.clone(), w1.clone(), w2.clone()));
            }
        }
    }
    sweep(cases, |(f, w1, w2)| {
        let fs = forest_sum(f);
        let w1xw2 = sum(w1).concat(&WordSum::letter(Letter::X)).concat(&sum(w2));
        let lhs = diamond(&w1xw2, &f_poly(&fs));
        let mut rhs = WordSum::zero();
        for ((fp, fpp), c) in coproduct(&fs).terms() {
            let a = diamond(&f_poly(&forest_sum(fp)), &sum(w1));
            let d = diamond(&f_poly(&forest_sum(fpp)), &sum(w2));
            rhs = rhs.add(&append_x(&a).concat(&d).scale(c));
        }
        (lhs != rhs)
            .then(|| case(format!("f={} w1={} w2={}: key proposition fails", f, w1, w2)))
            .flatten()
    })
}

/// Σ_{(f)} φ(F_{f'}) ⊗ φ(G_{f''}) for a nonempty forest.
fn phi_fg_tensor(f: &Forest) -> WordTensorSum {
    let mut out = WordTensorSum::zero();
    for ((fp, fpp), c) in coproduct(&forest_sum(f)).terms() {
        let left = phi(&f_poly(&forest_sum(fp)));
        let right = phi(&g_poly(&forest_sum(fpp)));
        out = out.add(&WordTensorSum::outer(&left, &right).scale(c));
    }
    out
}

fn check_lem_pq(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(nonempty_forests_up_to(b.max_forest_degree), |f| {
        let n = f.degree();
        let t = phi_fg_tensor(f);
        let coeffs = match solve_on_u_basis(&t, n) {
            Ok(Some(c)) => c,
            _ => return case(format!("f={}: tensor not in B", f)),
        };
        // p and q through the u-basis presentation
        let mut p_val = WordTensorSum::zero();
        let mut q_val = WordTensorSum::zero();
        for (v, c) in &coeffs {
            p_val = p_val.add(&pq_of_u(PqMap::P, v).unwrap().scale(c));
            q_val = q_val.add(&pq_of_u(PqMap::Q, v).unwrap().scale(c));
        }
        // the display formulas
        let gf = phi(&g_poly(&forest_sum(f)));
        let mut p_disp = WordTensorSum::outer(&WordSum::one(), &append_x(&gf));
        let mut q_disp = WordTensorSum::outer(&WordSum::letter(Letter::Y), &gf)
            .sub(&WordTensorSum::outer(&WordSum::one(), &gf.concat(&WordSum::z())));
        for ((fp, fpp), c) in coproduct(&forest_sum(f)).terms() {
            if fp.is_empty() {
                continue;
            }
            let phif = phi(&f_poly(&forest_sum(fp)));
            let phig = phi(&g_poly(&forest_sum(fpp)));
            let yx_shift = WordSum::parse("yx").unwrap().concat(&left_div_y(&phif).unwrap());
            p_disp = p_disp.add(&WordTensorSum::outer(&yx_shift, &phig).scale(c));
            let y_shift = WordSum::letter(Letter::Y).concat(&phif);
            q_disp = q_disp.add(&WordTensorSum::outer(&y_shift, &phig).scale(c));
        }
        if p_val != p_disp {
            return case(format!("f={}: p display mismatch", f));
        }
        if q_val != q_disp {
            return case(format!("f={}: q display mismatch", f));
        }
        // images stay in B
        if b_membership(&p_val, n + 1) != Ok(true) || b_membership(&q_val, n + 1) != Ok(true) {
            return case(format!("f={}: p/q image leaves B", f));
        }
        None
    })
}

fn check_prop_b(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(nonempty_forests_up_to(b.max_forest_degree), |f| {
        match b_membership(&phi_fg_tensor(f), f.degree()) {
            Ok(true) => None,
            _ => case(format!("f={}: Σ φ(F)⊗φ(G) not in B", f)),
        }
    })
}

fn check_prop_fg0(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(nonempty_forests_up_to(b.max_forest_degree), |f| {
        let mut acc = WordSum::zero();
        for ((fp, fpp), c) in coproduct(&forest_sum(f)).terms() {
            acc = acc.add(
                &diamond(&f_poly(&forest_sum(fp)), &g_poly(&forest_sum(fpp))).scale(c),
            );
        }
        (!acc.is_zero())
            .then(|| case(format!("f={}: Σ F<>G = {}", f, acc.render())))
            .flatten()
    })
}

fn check_prop_fs(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(nonempty_forests_up_to(b.max_forest_degree), |f| {
        let fs = forest_sum(f);
        let lhs = f_poly(&fs);
        let fsf = f_poly(&antipode(&fs));
        let rhs = WordSum::letter(Letter::Y)
            .concat(&tau(&left_div_y(&fsf).unwrap()))
            .neg();
        (lhs != rhs)
            .then(|| case(format!("f={}: F_f != -y tau Ly^-1 F_S(f)", f)))
            .flatten()
    })
}

fn check_lem_tau(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let mut cases = Vec::new();
    for d1 in 0..=b.max_word_length {
        for d2 in 0..=(b.max_word_length - d1) {
            for w1 in words_of_degree(d1) {
                for w2 in words_of_degree(d2) {
                    cases.push((w1.clone(), w2));
                }
            }
        }
    }
    sweep(cases, |(w1, w2)| {
        let y = WordSum::letter(Letter::Y);
        let yw1 = y.concat(&sum(w1));
        let yw2 = y.concat(&sum(w2));
        let first = append_x(&diamond(&yw1, &yw2));
        let inner = diamond(&y.concat(&tau(&sum(w1))), &y.concat(&tau(&sum(w2))));
        let second = y.concat(&tau(&inner));
        (!first.add(&second).is_zero())
            .then(|| case(format!("w1={} w2={}: tau relation fails", w1, w2)))
            .flatten()
    })
}

fn check_op_eq3(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let cases: Vec<Word> = (1..=b.max_word_length)
        .flat_map(a1_words_of_degree)
        .filter(|w| !w.is_one())
        .collect();
    sweep(cases, |w| {
        let s = sum(w);
        let lhs = phi(&right_div_x(&tau(&append_x(&phi(&s)))).unwrap()).neg();
        let rhs = endo_map(EndoMap::D, &endo_map(EndoMap::Rho, &endo_map(EndoMap::Sigma, &s).unwrap()).unwrap()).unwrap();
        (lhs != rhs)
            .then(|| case(format!("w={}: -phi Rx^-1 tau Rx phi != d rho sigma", w)))
            .flatten()
    })
}

fn check_factor_order(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let mut cases = Vec::new();
    for f in nonempty_forests_up_to(b.max_forest_degree) {
        if f.trees().len() < 2 {
            continue;
        }
        for w in words_up_to(b.max_word_length) {
            cases.push((f.clone(), w));
        }
    }
    sweep(cases, |(f, w)| {
        let reference = rtm_apply(&forest_sum(f), &sum(w));
        for perm in permutations(f.trees().len()) {
            let mut acc = sum(w);
            for &i in &perm {
                let single = ForestSum::from_forest(Forest::single(f.trees()[i].clone()));
                acc = rtm_apply(&single, &acc);
            }
            if acc != reference {
                return case(format!("f={} w={} order={:?}: factor order matters", f, w, perm));
            }
        }
        None
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// All compositions of n into positive parts.
fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

fn check_eq1(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let cases: Vec<Vec<usize>> = (1..=b.max_word_length).flat_map(compositions).collect();
    sweep(cases, |ks| {
        let r = ks.len();
        let mut acc = WordSum::zero();
        for i in 0..=r {
            let left = WordSum::from_word(blocks_word(&ks[..i]));
            let right = d_rho_closed(&blocks_word(&ks[i..])).unwrap();
            let term = star(&left, &right).unwrap();
            let sign = if i % 2 == 0 { crate::rational::q_one() } else { crate::rational::q_int(-1) };
            acc = acc.add(&term.scale(&sign));
        }
        (!acc.is_zero())
            .then(|| case(format!("k={:?}: alternating star sum is {}", ks, acc.render())))
            .flatten()
    })
}

fn a1_pairs_total(total: usize) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for d1 in 0..=total {
        for d2 in 0..=(total - d1) {
            for w1 in a1_words_of_degree(d1) {
                for w2 in a1_words_of_degree(d2) {
                    out.push((w1.clone(), w2));
                }
            }
        }
    }
    out
}

fn check_lem_d(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(a1_pairs_total(b.max_word_length), |(w1, w2)| {
        let lhs = endo_map(EndoMap::D, &harub(&sum(w1), &sum(w2)).unwrap()).unwrap();
        let rhs = star(
            &endo_map(EndoMap::D, &sum(w1)).unwrap(),
            &endo_map(EndoMap::D, &sum(w2)).unwrap(),
        )
        .unwrap();
        (lhs != rhs)
            .then(|| case(format!("w1={} w2={}: d(w1 hb w2) != d(w1)*d(w2)", w1, w2)))
            .flatten()
    })
}

fn check_phi_diamond(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(a1_pairs_total(b.max_word_length), |(w1, w2)| {
        let lhs = diamond(&sum(w1), &sum(w2));
        let rhs = phi(&star(&phi(&sum(w1)), &phi(&sum(w2))).unwrap());
        (lhs != rhs)
            .then(|| case(format!("w1={} w2={}: diamond != phi-conjugated star", w1, w2)))
            .flatten()
    })
}

fn check_lem_y(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let words = words_up_to(b.max_word_length);
    let mut cases = Vec::new();
    for w1 in &words {
        for w2 in &words {
            cases.push((w1.clone(), w2.clone()));
        }
    }
    sweep(cases, |(w1, w2)| {
        let y = WordSum::letter(Letter::Y);
        let w1xw2 = sum(w1).concat(&WordSum::letter(Letter::X)).concat(&sum(w2));
        let lhs = diamond(&w1xw2, &y);
        let rhs = append_x(&diamond(&sum(w1), &y))
            .concat(&sum(w2))
            .add(&sum(w1).concat(&WordSum::letter(Letter::X)).concat(&diamond(&sum(w2), &y)));
        (lhs != rhs)
            .then(|| case(format!("w1={} w2={}: identity on w1xw2 <> y fails", w1, w2)))
            .flatten()
    })
}

fn check_lem_u(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(a1_pairs_total(b.max_word_length), |(w1, w2)| {
        let mut lhs = WordTensorSum::zero();
        for (v, c) in harub(&sum(w1), &sum(w2)).unwrap().terms() {
            lhs = lhs.add(&u_map(v).unwrap().scale(c));
        }
        let rhs = tensor_star(&u_map(w1).unwrap(), &u_map(w2).unwrap()).unwrap();
        (lhs != rhs)
            .then(|| case(format!("w1={} w2={}: u not multiplicative", w1, w2)))
            .flatten()
    })
}

fn check_eq963(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let cases: Vec<Word> = (1..=b.max_word_length).flat_map(a1_words_of_degree).collect();
    sweep(cases, |w| {
        let blocks = word_blocks(w).unwrap();
        let lhs = u_map(w).unwrap();
        let first = WordTensorSum::outer(&WordSum::one(), &d_rho_closed(w).unwrap());
        let shifted = u_map(&blocks_word(&blocks[1..]))
            .unwrap()
            .left_shift(&blocks_word(&[blocks[0]]));
        let rhs = first.sub(&shifted);
        (lhs != rhs)
            .then(|| case(format!("w={}: u(w) != 1⊗dρ(w) - L' u(tail)", w)))
            .flatten()
    })
}

fn check_lem_im(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let cases: Vec<Word> = (1..=b.max_word_length).flat_map(a1_words_of_degree).collect();
    sweep(cases, |w| {
        let n = w.degree();
        for which in [PqMap::P, PqMap::Q] {
            let closed = pq_of_u(which, w).unwrap();
            let def = pq_definitional(which, w).unwrap();
            if closed != def {
                return case(format!("w={}: {:?} closed form != definition", w, which));
            }
            if b_membership(&closed, n + 1) != Ok(true) {
                return case(format!("w={}: {:?} image not in B", w, which));
            }
        }
        None
    })
}

fn check_m_u_zero(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let cases: Vec<Word> = (0..=b.max_word_length).flat_map(a1_words_of_degree).collect();
    sweep(cases, |w| {
        if w.is_one() {
            // M(u(1)) = 1∗1 = 1 is the unit, not zero; the statement is for Aug degrees
            return None;
        }
        let m = m_contract(&u_map(w).unwrap()).unwrap();
        (!m.is_zero())
            .then(|| case(format!("w={}: M(u(w)) = {}", w, m.render())))
            .flatten()
    })
}

fn check_prod_laws(b: Bounds) -> (u64, Option<serde_json::Value>) {
    let total = b.max_word_length;
    let mut failures: Option<serde_json::Value> = None;
    let mut checked = 0u64;
    // commutativity on pairs
    for (w1, w2) in a1_pairs_total(total) {
        checked += 1;
        let pairs_ok = star(&sum(&w1), &sum(&w2)).unwrap() == star(&sum(&w2), &sum(&w1)).unwrap()
            && harub(&sum(&w1), &sum(&w2)).unwrap() == harub(&sum(&w2), &sum(&w1)).unwrap();
        if !pairs_ok && failures.is_none() {
            failures = case(format!("w1={} w2={}: commutativity fails", w1, w2));
        }
    }
    // diamond commutativity on arbitrary words
    for d1 in 0..=total {
        for d2 in 0..=(total - d1) {
            for w1 in words_of_degree(d1) {
                for w2 in words_of_degree(d2) {
                    checked += 1;
                    if diamond(&sum(&w1), &sum(&w2)) != diamond(&sum(&w2), &sum(&w1))
                        && failures.is_none()
                    {
                        failures = case(format!("w1={} w2={}: diamond not commutative", w1, w2));
                    }
                }
            }
        }
    }
    // associativity on triples
    for d1 in 0..=total {
        for d2 in 0..=(total - d1) {
            for d3 in 0..=(total - d1 - d2) {
                for w1 in a1_words_of_degree(d1) {
                    for w2 in a1_words_of_degree(d2) {
                        for w3 in a1_words_of_degree(d3) {
                            checked += 1;
                            let s1 = star(&star(&sum(&w1), &sum(&w2)).unwrap(), &sum(&w3)).unwrap();
                            let s2 = star(&sum(&w1), &star(&sum(&w2), &sum(&w3)).unwrap()).unwrap();
                            let h1 = harub(&harub(&sum(&w1), &sum(&w2)).unwrap(), &sum(&w3)).unwrap();
                            let h2 = harub(&sum(&w1), &harub(&sum(&w2), &sum(&w3)).unwrap()).unwrap();
                            if (s1 != s2 || h1 != h2) && failures.is_none() {
                                failures = case(format!(
                                    "w1={} w2={} w3={}: associativity fails",
                                    w1, w2, w3
                                ));
                            }
                        }
                    }
                }
                for w1 in words_of_degree(d1) {
                    for w2 in words_of_degree(d2) {
                        for w3 in words_of_degree(d3) {
                            checked += 1;
                            let d_left = diamond(&diamond(&sum(&w1), &sum(&w2)), &sum(&w3));
                            let d_right = diamond(&sum(&w1), &diamond(&sum(&w2), &sum(&w3)));
                            if d_left != d_right && failures.is_none() {
                                failures = case(format!(
                                    "w1={} w2={} w3={}: diamond associativity fails",
                                    w1, w2, w3
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    (checked, failures)
}

fn check_rtm_image(b: Bounds) -> (u64, Option<serde_json::Value>) {
    sweep(nonempty_forests_up_to(b.max_forest_degree), |f| {
        for u in [Letter::X, Letter::Y] {
            let img = rtm_letter(f, u);
            if !img.in_ya() {
                return case(format!("f={} u={}: image leaves yA", f, u.char()));
            }
            for (w, _) in img.terms() {
                if w.degree() != f.degree() + 1 {
                    return case(format!("f={} u={}: degree not additive", f, u.char()));
                }
            }
        }
        let fp = f_poly(&forest_sum(f));
        if !fp.in_ya() {
            return case(format!("f={}: F_f leaves yA", f));
        }
        None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_roundtrip() {
        for n in IdentityName::all() {
            let parsed: IdentityName = n.name().parse().unwrap();
            assert_eq!(parsed, n);
        }
        assert!("bogus".parse::<IdentityName>().is_err());
        // mixed-case spellings are accepted
        assert_eq!("prop_FG0".parse::<IdentityName>().unwrap(), IdentityName::PropFg0);
        assert_eq!("prop_B".parse::<IdentityName>().unwrap(), IdentityName::PropB);
    }

    #[test]
    fn small_sweeps_pass() {
        for (name, bounds) in [
            (IdentityName::Thm1, Bounds::new(2, 2)),
            (IdentityName::Thm3, Bounds::new(2, 2)),
            (IdentityName::Eq1, Bounds::new(0, 4)),
            (IdentityName::LemY, Bounds::new(0, 2)),
        ] {
            let r = verify_identity(name, bounds);
            assert!(r.passed(), "{}: {:?}", name, r.counterexample);
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn report_serializes_with_expected_fields() {
        let r = verify_identity(IdentityName::Cor, Bounds::new(2, 0));
        let v = serde_json::to_value(&r).unwrap();
        for key in ["identity", "bounds", "status", "counterexample", "checked", "millis"] {
            assert!(v.get(key).is_some(), "missing {}", key);
        }
        assert_eq!(v["status"], "pass");
    }
}
