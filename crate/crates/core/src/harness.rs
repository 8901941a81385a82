//! Suite orchestration and machine-readable reports.
//!
//! A suite is a list of named cases, each a closure producing an outcome.
//! Cases run through [`Exec`] and the report is sorted by case id, so its
//! content depends only on the suite, the options and the seed.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::asmlab::{self, EnumOptions};
use crate::exactnum::{BigRat, Coeff};
use crate::multipoly::{Monomial, Poly, Vars};
use crate::par::Exec;
use crate::polylinalg::{self, Matrix};
use crate::symfunc::{self, m_staircase, staircase, two_staircase, Partition, StaircaseParams, WheelOutcome};
use crate::theorems::{self, TheoremError, TheoremTwoOptions};

pub const SUITES: [&str; 10] =
    ["asm", "theorem1", "theorem2", "wheel", "recursion", "bazin", "minexp", "schur", "appendixB", "all"];

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown suite {0:?}; expected one of {list}", list = SUITES.join(", "))]
    UnknownSuite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub id: String,
    pub params: Value,
    pub status: Status,
    pub detail: String,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub cases: Vec<CaseReport>,
    pub summary: Summary,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, mut cases: Vec<CaseReport>) -> Self {
        cases.sort_by(|a, b| a.id.cmp(&b.id));
        let summary = Summary {
            total: cases.len(),
            passed: cases.iter().filter(|c| c.status == Status::Pass).count(),
            failed: cases.iter().filter(|c| c.status == Status::Fail).count(),
        };
        SuiteReport { suite: suite.to_string(), seed, cases, summary }
    }

    pub fn ok(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable report")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// One line per case followed by the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
                Status::Infeasible => "INFEASIBLE",
            };
            out.push_str(&format!("{tag:<10} {} ({} ms)", c.id, c.elapsed_ms));
            if !c.detail.is_empty() {
                out.push_str(&format!("  {}", c.detail));
            }
            out.push('\n');
        }
        out.push_str(&format!(
            "{}: {} cases, {} passed, {} failed\n",
            self.suite, self.summary.total, self.summary.passed, self.summary.failed
        ));
        out
    }
}

/// Restrictions and knobs shared by all suites. Parameter filters that do
/// not apply to a suite are ignored by it.
#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    pub exec: Exec,
    pub n: Option<u32>,
    pub l: Option<u32>,
    pub lp: Option<u32>,
    pub m: Option<usize>,
    pub big_n: Option<usize>,
    pub asm: EnumOptions,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: DEFAULT_SEED,
            exec: Exec::default(),
            n: None,
            l: None,
            lp: None,
            m: None,
            big_n: None,
            asm: EnumOptions::default(),
        }
    }
}

impl SuiteOptions {
    fn keep_staircase(&self, p: StaircaseParams) -> bool {
        self.n.is_none_or(|n| n == p.n()) && self.l.is_none_or(|l| l == p.l()) && self.lp.is_none_or(|lp| lp == p.lp())
    }

    fn keep_n(&self, n: usize) -> bool {
        self.n.is_none_or(|x| x as usize == n)
    }

}

pub enum Outcome {
    Pass(String),
    Fail(String),
    Skipped(String),
    Infeasible(String),
}

impl Outcome {
    fn check(ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Outcome::Pass(detail.into())
        } else {
            Outcome::Fail(detail.into())
        }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome::Fail(format!("error: {e}"))
    }
}

type CaseFn = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Case {
    pub id: String,
    pub params: Value,
    run: CaseFn,
}

impl Case {
    pub fn new(id: impl Into<String>, params: Value, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Self {
        Case { id: id.into(), params, run: Box::new(run) }
    }
}

fn execute(cases: Vec<Case>, exec: Exec) -> Vec<CaseReport> {
    exec.map(cases, |case| {
        let start = Instant::now();
        let outcome = (case.run)();
        let elapsed_ms = start.elapsed().as_millis() as u64;
        let (status, detail) = match outcome {
            Outcome::Pass(d) => (Status::Pass, d),
            Outcome::Fail(d) => (Status::Fail, d),
            Outcome::Skipped(d) => (Status::Skipped, d),
            Outcome::Infeasible(d) => (Status::Infeasible, d),
        };
        CaseReport { id: case.id, params: case.params, status, detail, elapsed_ms }
    })
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteReport, HarnessError> {
    let cases = suite_cases(name, opts)?;
    Ok(SuiteReport::new(name, opts.seed, execute(cases, opts.exec)))
}

/// The cases of a suite without running them.
pub fn suite_cases(name: &str, opts: &SuiteOptions) -> Result<Vec<Case>, HarnessError> {
    Ok(match name {
        "asm" => asm_cases(opts),
        "theorem1" => theorem1_cases(opts),
        "theorem2" => theorem2_cases(opts),
        "wheel" => wheel_cases(opts),
        "recursion" => recursion_cases(opts),
        "bazin" => bazin_cases(opts),
        "minexp" => minexp_cases(opts),
        "schur" => schur_cases(opts),
        "appendixB" => appendix_b_cases(opts),
        "all" => {
            let mut all = Vec::new();
            for s in &SUITES[..SUITES.len() - 1] {
                for mut c in suite_cases(s, opts)? {
                    c.id = format!("{s}/{}", c.id);
                    all.push(c);
                }
            }
            all
        }
        other => return Err(HarnessError::UnknownSuite(other.to_string())),
    })
}

fn sp(n: u32, l: u32, lp: u32) -> StaircaseParams {
    StaircaseParams::new(n, l, lp).expect("valid staircase parameters")
}

fn sp_json(p: StaircaseParams) -> Value {
    json!({"n": p.n(), "l": p.l(), "lp": p.lp()})
}

/// Printed doubly-refined tables 𝒜¹..𝒜⁵.
pub fn golden_refined(n: usize) -> Option<Vec<Vec<u64>>> {
    let t: Vec<Vec<u64>> = match n {
        1 => vec![vec![1]],
        2 => vec![vec![0, 1], vec![1, 0]],
        3 => vec![vec![0, 1, 1], vec![1, 1, 1], vec![1, 1, 0]],
        4 => vec![vec![0, 2, 3, 2], vec![2, 4, 5, 3], vec![3, 5, 4, 2], vec![2, 3, 2, 0]],
        5 => vec![
            vec![0, 7, 14, 14, 7],
            vec![7, 21, 33, 30, 14],
            vec![14, 33, 41, 33, 14],
            vec![14, 30, 33, 21, 7],
            vec![7, 14, 14, 7, 0],
        ],
        _ => return None,
    };
    Some(t)
}

pub fn golden_csv(n: usize) -> Option<String> {
    let t = golden_refined(n)?;
    let mut out = String::from("i\\j");
    for j in 1..=n {
        out.push_str(&format!(",{j}"));
    }
    out.push('\n');
    for (i, row) in t.iter().enumerate() {
        out.push_str(&(i + 1).to_string());
        for c in row {
            out.push_str(&format!(",{c}"));
        }
        out.push('\n');
    }
    Some(out)
}

fn asm_cases(opts: &SuiteOptions) -> Vec<Case> {
    let a = opts.asm;
    let mut cases = Vec::new();
    for n in (1..=6).filter(|&n| opts.keep_n(n)) {
        cases.push(Case::new(format!("count/n={n}"), json!({"n": n}), move || {
            match asmlab::enumerate(n, a) {
                Ok(it) => {
                    let mut count = 0u64;
                    for asm in it {
                        if asmlab::Asm::new(asm.rows()).is_err() {
                            return Outcome::Fail(format!("invalid matrix yielded:\n{asm}"));
                        }
                        count += 1;
                    }
                    let f = asmlab::count_formula(n);
                    Outcome::check(num_bigint::BigUint::from(count) == f, format!("{count} vs formula {f}"))
                }
                Err(e) => Outcome::error(e),
            }
        }));
        cases.push(Case::new(format!("table-invariants/n={n}"), json!({"n": n}), move || {
            match asmlab::refined_matrix(n, a, Exec::Sequential) {
                Ok(t) => {
                    let mut bad = t.invariant_violations();
                    if !t.is_persymmetric() {
                        bad.push("not persymmetric".into());
                    }
                    Outcome::check(bad.is_empty(), bad.join("; "))
                }
                Err(e) => Outcome::error(e),
            }
        }));
    }
    for n in (1..=5).filter(|&n| opts.keep_n(n)) {
        cases.push(Case::new(format!("golden-csv/n={n}"), json!({"n": n}), move || {
            match asmlab::refined_matrix(n, a, Exec::Sequential) {
                Ok(t) => Outcome::check(Some(t.to_csv()) == golden_csv(n), t.to_csv().replace('\n', " | ")),
                Err(e) => Outcome::error(e),
            }
        }));
        cases.push(Case::new(format!("rowcol-consistency/n={n}"), json!({"n": n}), move || {
            let sharded = asmlab::refined_rowcol(n, a, Exec::Sequential);
            let a_table = asmlab::refined_matrix(n, a, Exec::Sequential);
            let stream = asmlab::refined_by_stream(n, a);
            match (sharded, a_table, stream) {
                (Ok(b), Ok(at), Ok((sa, sb))) => {
                    let rows_agree = (0..n).all(|i| b.row_sum(i) == at.row_sum(i));
                    Outcome::check(rows_agree && b == sb && at == sa, format!("row sums agree: {rows_agree}"))
                }
                (Err(e), ..) | (_, Err(e), _) | (.., Err(e)) => Outcome::error(e),
            }
        }));
        cases.push(Case::new(format!("schur-count/n={n}"), json!({"n": n}), move || {
            match asmlab::schur_count_check(n, a) {
                Ok(ok) => Outcome::check(ok, "A_n 3^C(n,2) = s(1^2n)"),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    for n in (1..=4).filter(|&n| opts.keep_n(n)) {
        cases.push(Case::new(format!("combinatorial-point/n={n}"), json!({"n": n}), move || {
            match asmlab::combinatorial_point_values(n, a) {
                Ok((z, expected, all_equal)) => {
                    Outcome::check(all_equal && z == expected, format!("Z = {z}, all weights q - q^2: {all_equal}"))
                }
                Err(e) => Outcome::error(e),
            }
        }));
    }
    for n in (1..=3).filter(|&n| opts.keep_n(n)) {
        cases.push(Case::new(format!("double-refined/n={n}"), json!({"n": n}), move || {
            match asmlab::double_refined_check(n, a, Exec::Sequential) {
                Ok(ok) => Outcome::check(ok, ""),
                Err(e) => Outcome::error(e),
            }
        }));
        cases.push(Case::new(format!("vander-substitution/n={n}"), json!({"n": n}), move || {
            match asmlab::vander_substitution_check(n) {
                Ok(ok) => Outcome::check(ok, ""),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    cases
}

fn theorem1_cases(opts: &SuiteOptions) -> Vec<Case> {
    let a = opts.asm;
    (2..=6)
        .filter(|&n| opts.keep_n(n))
        .map(|n| {
            Case::new(format!("det/n={n}"), json!({"n": n}), move || match asmlab::theorem1_values(n, a, Exec::Sequential) {
                Ok((det, expected)) => {
                    Outcome::check(BigRat::from_integer(det.clone()) == expected, format!("det = {det}, expected {expected}"))
                }
                Err(e) => Outcome::error(e),
            })
        })
        .collect()
}

/// The verified parameter set for the coefficient-matrix identity.
pub fn theorem2_parameter_set() -> Vec<StaircaseParams> {
    let mut out = Vec::new();
    for n in 1..=2 {
        for l in 0..=3 {
            for lp in 0..=l {
                out.push(sp(n, l, lp));
            }
        }
    }
    out.push(sp(3, 1, 0));
    out.push(sp(3, 1, 1));
    out
}

fn theorem_outcome(r: Result<Outcome, TheoremError>) -> Outcome {
    match r {
        Ok(o) => o,
        Err(TheoremError::Infeasible(d)) => Outcome::Infeasible(d),
        Err(e) => Outcome::error(e),
    }
}

fn theorem2_cases(opts: &SuiteOptions) -> Vec<Case> {
    let force = opts.asm.force;
    let params: Vec<StaircaseParams> = match (opts.n, opts.l) {
        (Some(n), Some(l)) => match StaircaseParams::new(n, l, opts.lp.unwrap_or(0)) {
            Ok(p) => vec![p],
            Err(e) => {
                let msg = e.to_string();
                return vec![Case::new("identity/invalid", json!({}), move || Outcome::Fail(msg.clone()))];
            }
        },
        _ => theorem2_parameter_set().into_iter().filter(|p| opts.keep_staircase(*p)).collect(),
    };
    let mut cases = Vec::new();
    for p in params {
        let id = format!("identity/n={},l={},lp={}", p.n(), p.l(), p.lp());
        cases.push(Case::new(id, sp_json(p), move || {
            let generic_xy = p.n() <= 2 && p.l() <= 2;
            theorem_outcome(theorems::theorem2_verify(p, TheoremTwoOptions { generic_xy, force }).map(|r| {
                let found = r.constant_found.as_ref().map_or("none".to_string(), crate::exactnum::fmt_rat);
                let constant_ok = r.constant_found == Some(BigRat::from_integer(BigInt::from(r.constant_expected)));
                Outcome::check(
                    r.pass && constant_ok,
                    format!(
                        "N={}, constant found {found}, expected {}, generic xy: {:?}",
                        r.size, r.constant_expected, r.generic_agrees
                    ),
                )
            }))
        }));
        if p.n() >= 2 {
            let id = format!("divisibility/n={},l={},lp={}", p.n(), p.l(), p.lp());
            cases.push(Case::new(id, sp_json(p), move || {
                theorem_outcome(theorems::theorem2_divisibility_probe(p, force).map(|ok| Outcome::check(ok, "")))
            }));
        }
        if p.n() >= 2 && theorems::expected_constant(p) == 0 {
            let id = format!("gcd-vanishing/n={},l={},lp={}", p.n(), p.l(), p.lp());
            cases.push(Case::new(id, sp_json(p), move || match symfunc::gcd_vanishing_check(p, 1, 2) {
                Ok(Some(ok)) => Outcome::check(ok, "s vanishes on z_1 = q^k z_2"),
                Ok(None) => Outcome::Skipped("gcd is 1".into()),
                Err(e) => Outcome::error(e),
            }));
        }
    }
    if opts.l.is_none() && opts.lp.is_none() {
        let exec = Exec::Sequential;
        for n in (2..=5).filter(|&n| opts.keep_n(n)) {
            cases.push(Case::new(format!("via-theorem2/n={n}"), json!({"n": n}), move || {
                theorem_outcome(theorems::theorem1_via_theorem2_values(n, exec).map(|v| {
                    Outcome::check(
                        v.passed(),
                        format!(
                            "Q1 = {}, predicted {}, derived det {:?}, brute force {}",
                            crate::exactnum::fmt_rat(&v.q1),
                            crate::exactnum::fmt_rat(&v.q1_predicted),
                            v.derived_det.as_ref().map(crate::exactnum::fmt_rat),
                            v.brute_force_det
                        ),
                    )
                }))
            }));
        }
    }
    cases
}

/// Parameter sets of the main-text wheel and recursion checks.
pub fn wheel_parameter_set() -> Vec<StaircaseParams> {
    vec![sp(2, 1, 0), sp(2, 2, 0), sp(2, 2, 1), sp(3, 1, 0), sp(3, 1, 1)]
}

fn combos(n: u32, k: usize, base: u32) -> Vec<Vec<u32>> {
    polylinalg::subsets_lex(n as usize, k).into_iter().map(|s| s.into_iter().map(|x| x as u32 + base).collect()).collect()
}

fn wheel_cases(opts: &SuiteOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    for p in wheel_parameter_set().into_iter().filter(|p| opts.keep_staircase(*p)) {
        // every position triple with every assignment of exponent triples
        let positions = combos(2 * p.n(), 3, 1);
        let exponents = combos(p.l() + 2, 3, 0);
        let id = format!("all-choices/n={},l={},lp={}", p.n(), p.l(), p.lp());
        let params = json!({"n": p.n(), "l": p.l(), "lp": p.lp(), "instances": positions.len() * exponents.len()});
        cases.push(Case::new(id, params, move || {
            let mut failures = Vec::new();
            for pos in &positions {
                for ex in &exponents {
                    match symfunc::wheel_check(p, [pos[0], pos[1], pos[2]], [ex[0], ex[1], ex[2]]) {
                        Ok(true) => {}
                        Ok(false) => failures.push(format!("{pos:?}/{ex:?}")),
                        Err(e) => return Outcome::error(e),
                    }
                }
            }
            let total = positions.len() * exponents.len();
            Outcome::check(failures.is_empty(), format!("{total} substitutions, non-zero at {failures:?}"))
        }));
        if num_integer::gcd(p.lp() + 1, p.l() + 2) > 1 {
            let id = format!("gcd-vanishing/n={},l={},lp={}", p.n(), p.l(), p.lp());
            cases.push(Case::new(id, sp_json(p), move || match symfunc::gcd_vanishing_check(p, 1, 2) {
                Ok(Some(ok)) => Outcome::check(ok, "s vanishes on z_1 = q^k z_2"),
                Ok(None) => Outcome::Fail("gcd unexpectedly 1".into()),
                Err(e) => Outcome::error(e),
            }));
        }
    }
    cases
}

fn recursion_cases(opts: &SuiteOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    for p in wheel_parameter_set().into_iter().filter(|p| opts.keep_staircase(*p)) {
        for k in 1..=p.l() + 1 {
            let pairs = combos(2 * p.n(), 2, 1);
            let id = format!("all-pairs/n={},l={},lp={},k={k}", p.n(), p.l(), p.lp());
            let params = json!({"n": p.n(), "l": p.l(), "lp": p.lp(), "k": k});
            cases.push(Case::new(id, params, move || {
                let mut failures = Vec::new();
                for pair in &pairs {
                    match symfunc::recursion_check(p, pair[0], pair[1], k) {
                        Ok(true) => {}
                        Ok(false) => failures.push(format!("{pair:?}")),
                        Err(e) => return Outcome::error(e),
                    }
                }
                Outcome::check(failures.is_empty(), format!("{} position pairs, mismatched at {failures:?}", pairs.len()))
            }));
        }
    }
    cases
}

fn random_int_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<BigInt> {
    Matrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-9..=9)))
}

/// (m, n, p) shapes cycled through by the randomized compound-determinant suite.
pub const BAZIN_GRID: [(usize, usize, usize); 8] =
    [(2, 1, 0), (2, 1, 1), (3, 2, 1), (3, 2, 2), (3, 3, 1), (4, 2, 1), (4, 3, 2), (4, 4, 2)];

fn case_rng(seed: u64, stream: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.set_word_pos(index as u128 * 1024);
    rng
}

fn bazin_cases(opts: &SuiteOptions) -> Vec<Case> {
    let seed = opts.seed;
    (0..100u64)
        .map(|i| {
            let (m, n, p) = BAZIN_GRID[i as usize % BAZIN_GRID.len()];
            let params = json!({"m": m, "n": n, "p": p, "instance": i});
            Case::new(format!("random/{i:03}"), params, move || {
                let mut rng = case_rng(seed, 1, i);
                let a = random_int_matrix(&mut rng, m, n);
                let b = random_int_matrix(&mut rng, m, n);
                let c = random_int_matrix(&mut rng, m, m - n);
                match polylinalg::bazin_sides(p, &a, &b, &c, None) {
                    Ok((lhs, rhs)) => Outcome::check(lhs == rhs, format!("(m,n,p)=({m},{n},{p}): det D = {lhs}, rhs = {rhs}")),
                    Err(e) => Outcome::error(e),
                }
            })
        })
        .collect()
}

fn rat_table(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<BigRat>> {
    (0..rows).map(|_| (0..cols).map(|_| BigRat::from_integer(BigInt::from(rng.gen_range(-5..=5)))).collect()).collect()
}

fn minexp_cases(opts: &SuiteOptions) -> Vec<Case> {
    let seed = opts.seed;
    let mut cases = Vec::new();
    for k in 1..=3usize {
        for n in 2..=4usize {
            let params = json!({"k": k, "n": n, "instances": 100});
            cases.push(Case::new(format!("sum/k={k},n={n}"), params, move || {
                for i in 0..100u64 {
                    let mut rng = case_rng(seed, 2, (k * 10 + n) as u64 * 1000 + i);
                    let ms: Vec<_> = (0..k).map(|_| random_int_matrix(&mut rng, n, n)).collect();
                    match polylinalg::minor_expansion_sides(&ms) {
                        Ok((l, r)) if l == r => {}
                        Ok((l, r)) => return Outcome::Fail(format!("instance {i}: {l} vs {r}")),
                        Err(e) => return Outcome::error(e),
                    }
                }
                Outcome::Pass("100 instances".into())
            }));
        }
    }
    // (m, n, k, λ) shapes of the divisibility corollary
    let shapes: [(usize, usize, Vec<u32>); 3] = [(2, 2, vec![0, 0]), (3, 2, vec![0, 0, 0]), (4, 3, vec![1, 0, 0, 0])];
    let ks = [2usize, 1, 2];
    for (idx, ((m, n, lambda), k)) in shapes.into_iter().zip(ks).enumerate() {
        let params = json!({"m": m, "n": n, "k": k, "lambda": lambda});
        cases.push(Case::new(format!("divisibility/m={m},n={n},k={k}"), params, move || {
            let mut rng = case_rng(seed, 3, idx as u64);
            let u = rat_table(&mut rng, k, n);
            let v = rat_table(&mut rng, k, n);
            let lam = Partition::new(lambda.clone()).unwrap();
            match polylinalg::divisibility_corollary_check(&lam, n, &u, &v) {
                Ok(ok) => Outcome::check(ok, format!("P = shifted Vandermonde of ({lam})")),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    let uv = Vars::new(["u", "v"]);
    let lemma_polys: Vec<(&str, usize, Poly<BigRat>)> = {
        let u = Poly::<BigRat>::var(&uv, 0);
        let v = Poly::<BigRat>::var(&uv, 1);
        let s = &u + &v;
        vec![("uv", 2, &u * &v), ("1+uv", 2, &Poly::one(&uv) + &(&u * &v)), ("(u+v)^2", 3, &s * &s)]
    };
    for (idx, (name, n, poly)) in lemma_polys.into_iter().enumerate() {
        cases.push(Case::new(format!("lemma/{name}"), json!({"P": name, "n": n}), move || {
            let mut rng = case_rng(seed, 4, idx as u64);
            let distinct = |rng: &mut ChaCha8Rng| {
                let mut seen = BTreeSet::new();
                while seen.len() < n {
                    seen.insert(rng.gen_range(-20i64..=20));
                }
                seen.into_iter().map(|x| BigRat::new(BigInt::from(x), BigInt::from(3))).collect::<Vec<_>>()
            };
            let us = distinct(&mut rng);
            let vs = distinct(&mut rng);
            match polylinalg::coefficient_factorization_check(&poly, &us, &vs) {
                Ok(ok) => Outcome::check(ok, ""),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    cases
}

/// Every partition whose Schur polynomial enters the theorem, wheel and
/// m-staircase checks.
pub fn partitions_in_use() -> Vec<Partition> {
    let mut set = BTreeSet::new();
    for p in theorem2_parameter_set().into_iter().chain(wheel_parameter_set()) {
        set.insert(two_staircase(p));
        if p.n() > 1 {
            set.insert(two_staircase(sp(p.n() - 1, p.l(), p.lp())));
            set.insert(staircase(2 * p.n() as usize - 2, p.l() + 1));
        }
    }
    for (big_n, m, l, lp) in appendix_b_instances() {
        let lp = Partition::new(lp).unwrap();
        if let Ok(lam) = m_staircase(big_n, m, l, &lp) {
            set.insert(lam);
        }
        if big_n >= m {
            if let Ok(lam) = m_staircase(big_n - m, m, l, &lp) {
                set.insert(lam);
            }
        }
    }
    set.into_iter().filter(|p| !p.is_empty()).collect()
}

fn random_distinct_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRat> {
    let mut out: Vec<BigRat> = Vec::with_capacity(n);
    while out.len() < n {
        let r = BigRat::new(BigInt::from(rng.gen_range(-30i64..=30)), BigInt::from(rng.gen_range(1i64..=7)));
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

fn random_partition(rng: &mut ChaCha8Rng, len: usize, max_weight: u32) -> Partition {
    loop {
        let mut parts: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().sum::<u32>() <= max_weight {
            return Partition::new(parts).unwrap();
        }
    }
}

fn schur_cases(opts: &SuiteOptions) -> Vec<Case> {
    let seed = opts.seed;
    let mut cases = Vec::new();
    for (idx, lambda) in partitions_in_use().into_iter().enumerate() {
        let params = json!({"partition": lambda.to_string(), "points": 20});
        cases.push(Case::new(format!("two-path/{lambda}"), params, move || {
            let s = symfunc::schur_bialternant(&lambda);
            if !s.is_symmetric() || !s.is_homogeneous() || (s.num_terms() > 0 && s.total_degree() != lambda.weight()) {
                return Outcome::Fail("bialternant is not symmetric homogeneous of degree |λ|".into());
            }
            let mut rng = case_rng(seed, 5, idx as u64);
            for t in 0..20 {
                let pts = random_distinct_rationals(&mut rng, lambda.len());
                let a = s.eval(&pts).unwrap();
                let b = symfunc::schur_specialized(&lambda, &pts).unwrap();
                let c = symfunc::schur_ratio_at(&lambda, &pts).unwrap();
                if a != b || a != c {
                    return Outcome::Fail(format!("point {t}: bialternant {a}, Jacobi–Trudi {b}, ratio {c}"));
                }
            }
            Outcome::Pass(format!("{} terms", s.num_terms()))
        }));
    }
    for big_n in 1..=5usize {
        for h in 0..=3u32 {
            cases.push(Case::new(format!("staircase-product/N={big_n},h={h}"), json!({"N": big_n, "h": h}), move || {
                let vars = Vars::indexed("z", big_n);
                let s = symfunc::schur_bialternant_in(&staircase(big_n, h), &vars).unwrap();
                let u = symfunc::chebyshev_u(h);
                let mut prod = Poly::one(&vars);
                for i in 0..big_n {
                    for j in i + 1..big_n {
                        let f = u.compose(&vars, &[Poly::var(&vars, i), Poly::var(&vars, j)]).unwrap();
                        prod = &prod * &f;
                    }
                }
                Outcome::check(s == prod, "")
            }));
        }
    }
    let documented: Vec<(Vec<u32>, Vec<u32>)> =
        vec![(vec![2], vec![1]), (vec![1, 1], vec![0, 0]), (vec![2, 2], vec![1, 0])];
    let mut pairs: Vec<(String, Partition, Partition)> = documented
        .into_iter()
        .map(|(a, b)| {
            let (a, b) = (Partition::new(a).unwrap(), Partition::new(b).unwrap());
            (format!("documented/({a})+({b})"), a, b)
        })
        .collect();
    let mut rng = case_rng(seed, 6, 0);
    let mut r = 0;
    while r < 10 {
        let k = rng.gen_range(1..=3);
        let h = rng.gen_range(1..=3);
        let lam = random_partition(&mut rng, k, 6);
        let mu = random_partition(&mut rng, h, 8);
        if lam.parts()[k - 1] < mu.parts()[0] || lam.weight() + mu.weight() > 8 {
            continue;
        }
        pairs.push((format!("random/{r:02}/({lam})+({mu})"), lam, mu));
        r += 1;
    }
    for (id, lam, mu) in pairs {
        let params = json!({"lambda": lam.to_string(), "mu": mu.to_string()});
        cases.push(Case::new(format!("splitting/{id}"), params, move || match symfunc::splitting_check(&lam, &mu) {
            Ok(ok) => Outcome::check(ok, ""),
            Err(e) => Outcome::error(e),
        }));
    }
    for l in 0..=4u32 {
        for lp in 0..=l {
            let p = sp(2, l, lp);
            let id = format!("unfactorability-value/l={l},lp={lp}");
            cases.push(Case::new(id, sp_json(p), move || match symfunc::unfactorability_values(p) {
                Ok((a, b)) => Outcome::check(a == b, format!("s(z,z,z,0) = {a}")),
                Err(e) => Outcome::error(e),
            }));
        }
    }
    cases
}

/// (N, m, ℓ, λ′) instances of the m-staircase checks.
pub fn appendix_b_instances() -> Vec<(usize, usize, u32, Vec<u32>)> {
    let mut v = vec![(4, 3, 1, vec![0, 0, 0]), (4, 3, 1, vec![1, 0, 0]), (4, 3, 1, vec![1, 1, 0])];
    for l in 0..=2 {
        v.push((4, 2, l, vec![0, 0]));
        if l >= 1 {
            v.push((4, 2, l, vec![1, 0]));
        }
    }
    v
}

fn appendix_b_cases(opts: &SuiteOptions) -> Vec<Case> {
    let mut cases = Vec::new();
    let keep = |big_n: usize, m: usize| opts.big_n.is_none_or(|x| x == big_n) && opts.m.is_none_or(|x| x == m);
    for (big_n, m, l, lp) in appendix_b_instances().into_iter().filter(|(bn, m, ..)| keep(*bn, *m)) {
        let lp = Partition::new(lp).unwrap();
        let params = json!({"N": big_n, "m": m, "l": l, "lambda_prime": lp.to_string()});
        let order = l + m as u32;
        let tag = format!("N={big_n},m={m},l={l},lp=({lp})");
        let (lp1, lp2) = (lp.clone(), lp.clone());
        cases.push(Case::new(format!("m-wheel/{tag}"), params.clone(), move || {
            let mut count = 0;
            for pos in combos(big_n as u32, m + 1, 1) {
                for ks in combos(order, m + 1, 1) {
                    match symfunc::m_wheel_check(big_n, m, l, &lp1, &pos, &ks) {
                        Ok(WheelOutcome::Vanishes) => count += 1,
                        Ok(WheelOutcome::Vacuous) => return Outcome::Pass("vacuous".into()),
                        Ok(WheelOutcome::NonZero) => return Outcome::Fail(format!("non-zero at I={pos:?}, K={ks:?}")),
                        Err(e) => return Outcome::error(e),
                    }
                }
            }
            Outcome::Pass(format!("{count} wheel hyperplanes"))
        }));
        cases.push(Case::new(format!("m-recursion/{tag}"), params, move || {
            let mut count = 0;
            for pos in combos(big_n as u32, m, 1) {
                for ks in combos(order, m, 1) {
                    match symfunc::m_recursion_check(big_n, m, l, &lp2, &pos, &ks) {
                        Ok(true) => count += 1,
                        Ok(false) => return Outcome::Fail(format!("mismatch at I={pos:?}, K={ks:?}")),
                        Err(e) => return Outcome::error(e),
                    }
                }
            }
            Outcome::Pass(format!("{count} substitutions"))
        }));
    }
    if keep(3, 3) {
        cases.push(Case::new("m-wheel/vacuous/N=3,m=3,l=2", json!({"N": 3, "m": 3, "l": 2}), || {
            match symfunc::m_wheel_check(3, 3, 2, &Partition::zeros(3), &[1, 2, 3, 4], &[1, 2, 3, 4]) {
                Ok(o) => Outcome::check(o == WheelOutcome::Vacuous, format!("{o:?}")),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    for m in 1..=3usize {
        for big_n in 1..=5usize {
            for l in 0..=2u32 {
                if !keep(big_n, m) {
                    continue;
                }
                let params = json!({"N": big_n, "m": m, "l": l});
                cases.push(Case::new(format!("degree-triple/N={big_n},m={m},l={l}"), params, move || {
                    match (symfunc::degree_triple(big_n, m, l), symfunc::degree_triple_of_polynomial(big_n, m, l)) {
                        (Ok(a), Ok(b)) => Outcome::check(a == b, format!("formula {a:?}, polynomial {b:?}")),
                        (Err(e), _) | (_, Err(e)) => Outcome::error(e),
                    }
                }));
            }
        }
    }
    for (big_n, m, l) in [(3usize, 1usize, 1u32), (4, 2, 1), (2, 2, 1), (3, 2, 1)] {
        if !keep(big_n, m) {
            continue;
        }
        let params = json!({"N": big_n, "m": m, "l": l});
        cases.push(Case::new(format!("wheel-space/N={big_n},m={m},l={l}"), params, move || {
            match symfunc::wheel_space_dimension(big_n, m, l, None) {
                Ok(d) => Outcome::check(d == 1, format!("dimension {d}")),
                Err(symfunc::SymError::TooLarge(d)) => Outcome::Infeasible(d),
                Err(e) => Outcome::error(e),
            }
        }));
    }
    cases
}

/// Monomial helper for callers building small polynomials by hand.
pub fn monomial<F: Coeff>(vars: &Vars, exps: &[u32], c: F) -> Poly<F> {
    Poly::monomial(vars, Monomial::new(exps.iter().copied()), c)
}
