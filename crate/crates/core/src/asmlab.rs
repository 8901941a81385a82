//! Alternating sign matrices: enumeration, refined statistics, the
//! six-vertex weights at the combinatorial point and the determinant of the
//! doubly-refined table.
//!
//! Enumeration runs row by row over the vector of column partial sums, each
//! entry of which is 0 or 1. A row is valid for a state `c` when its own
//! partial sums stay in {0, 1}, it sums to 1, and `c + row` is again a 0/1
//! vector.

use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{binomial, BigRat, Coeff, CycloNum, Ring};
use crate::multipoly::{Monomial, Poly, Vars};
use crate::par::Exec;
use crate::polylinalg::{determinant, vandermonde_product, Matrix};
use crate::symfunc::{schur_specialized, two_staircase, StaircaseParams, SymError};

pub const DEFAULT_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsmError {
    #[error("n = {n} exceeds the enumeration cap {cap}; pass force to override")]
    CapExceeded { n: usize, cap: usize },
    #[error("n must be positive")]
    ZeroSize,
    #[error("not an alternating sign matrix: {0}")]
    Invalid(String),
    #[error(transparent)]
    Sym(#[from] SymError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumOptions {
    pub cap: usize,
    pub force: bool,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions { cap: DEFAULT_CAP, force: false }
    }
}

impl EnumOptions {
    pub fn forced() -> Self {
        EnumOptions { cap: DEFAULT_CAP, force: true }
    }

    pub fn admit(&self, n: usize) -> Result<(), AsmError> {
        if n == 0 {
            return Err(AsmError::ZeroSize);
        }
        if n > self.cap && !self.force {
            return Err(AsmError::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }
}

/// An n×n alternating sign matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Asm {
    n: usize,
    entries: Vec<i8>,
}

impl Asm {
    pub fn new(rows: Vec<Vec<i8>>) -> Result<Self, AsmError> {
        let n = rows.len();
        if n == 0 {
            return Err(AsmError::ZeroSize);
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(AsmError::Invalid("matrix is not square".into()));
        }
        let asm = Asm { n, entries: rows.into_iter().flatten().collect() };
        asm.validate()?;
        Ok(asm)
    }

    fn validate(&self) -> Result<(), AsmError> {
        let n = self.n;
        for i in 0..n {
            let (mut row, mut col) = (0i32, 0i32);
            for j in 0..n {
                row += self.get(i, j) as i32;
                col += self.get(j, i) as i32;
                if !(0..=1).contains(&row) || !(0..=1).contains(&col) {
                    return Err(AsmError::Invalid(format!("partial sum leaves {{0,1}} at line {}", i + 1)));
                }
            }
            if row != 1 || col != 1 {
                return Err(AsmError::Invalid(format!("line {} does not sum to 1", i + 1)));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.entries.chunks(self.n).map(<[i8]>::to_vec).collect()
    }

    /// 0-based column of the +1 in row `r`, for a row that is a unit vector.
    fn unit_position(row: &[i8]) -> Option<usize> {
        row.iter().position(|&x| x == 1)
    }

    pub fn first_row_one(&self) -> usize {
        Self::unit_position(&self.entries[..self.n]).unwrap()
    }

    pub fn last_row_one(&self) -> usize {
        Self::unit_position(&self.entries[(self.n - 1) * self.n..]).unwrap()
    }

    pub fn first_col_one(&self) -> usize {
        (0..self.n).find(|&i| self.get(i, 0) == 1).unwrap()
    }
}

impl fmt::Display for Asm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<&str> = row.iter().map(|&x| match x { 1 => "+", -1 => "-", _ => "0" }).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Valid rows for each column-sum state, with the state that follows.
struct RowTable {
    n: usize,
    rows: HashMap<u32, Vec<(Vec<i8>, u32)>>,
}

impl RowTable {
    fn new(n: usize) -> Self {
        RowTable { n, rows: HashMap::new() }
    }

    fn rows_for(&mut self, state: u32) -> &[(Vec<i8>, u32)] {
        let n = self.n;
        self.rows.entry(state).or_insert_with(|| {
            let mut out = Vec::new();
            let mut cur = vec![0i8; n];
            build_rows(n, state, 0, 0, &mut cur, &mut out);
            out
        })
    }
}

// Entries tried in the order −1, 0, +1, which makes the output
// lexicographic on row vectors.
fn build_rows(n: usize, state: u32, j: usize, sum: i8, cur: &mut Vec<i8>, out: &mut Vec<(Vec<i8>, u32)>) {
    if j == n {
        if sum == 1 {
            let mut next = state;
            for (k, &x) in cur.iter().enumerate() {
                if x == 1 {
                    next |= 1 << k;
                } else if x == -1 {
                    next &= !(1 << k);
                }
            }
            out.push((cur.clone(), next));
        }
        return;
    }
    let filled = state & (1 << j) != 0;
    if sum == 1 && filled {
        cur[j] = -1;
        build_rows(n, state, j + 1, 0, cur, out);
    }
    cur[j] = 0;
    build_rows(n, state, j + 1, sum, cur, out);
    if sum == 0 && !filled {
        cur[j] = 1;
        build_rows(n, state, j + 1, 1, cur, out);
    }
    cur[j] = 0;
}

/// Lazy, deterministic stream of all n×n ASMs, lexicographic on rows.
pub struct AsmIter {
    n: usize,
    table: RowTable,
    // per depth: state before the row, index of the next choice
    stack: Vec<(u32, usize)>,
    current: Vec<Vec<i8>>,
}

impl Iterator for AsmIter {
    type Item = Asm;

    fn next(&mut self) -> Option<Asm> {
        let n = self.n;
        let full = (1u32 << n) - 1;
        loop {
            let (state, idx) = *self.stack.last()?;
            let depth = self.stack.len() - 1;
            let options = self.table.rows_for(state);
            if idx >= options.len() {
                self.stack.pop();
                self.current.pop();
                continue;
            }
            let (row, next) = options[idx].clone();
            self.stack.last_mut().unwrap().1 += 1;
            if depth + 1 == n {
                if next == full {
                    let mut rows = self.current.clone();
                    rows.push(row);
                    return Some(Asm { n, entries: rows.into_iter().flatten().collect() });
                }
                continue;
            }
            self.current.push(row);
            self.stack.push((next, 0));
        }
    }
}

pub fn enumerate(n: usize, opts: EnumOptions) -> Result<AsmIter, AsmError> {
    opts.admit(n)?;
    Ok(AsmIter { n, table: RowTable::new(n), stack: vec![(0, 0)], current: Vec::new() })
}

/// A_n = ∏_{j=0}^{n−1} (3j+1)! / (n+j)!.
pub fn count_formula(n: usize) -> BigUint {
    let fact = |k: usize| (1..=k).fold(BigUint::from(1u32), |acc, x| acc * BigUint::from(x));
    let mut num = BigUint::from(1u32);
    let mut den = BigUint::from(1u32);
    for j in 0..n {
        num *= fact(3 * j + 1);
        den *= fact(n + j);
    }
    num / den
}

/// Visits every ASM whose first row has its +1 in column `first`, reporting
/// (last-row column, first-column row) for each.
fn visit_shard(n: usize, first: usize, mut f: impl FnMut(usize, usize)) {
    if n == 1 {
        f(0, 0);
        return;
    }
    let full = (1u32 << n) - 1;
    let mut table = RowTable::new(n);
    let first_col = if first == 0 { Some(0) } else { None };
    fn rec(
        table: &mut RowTable,
        n: usize,
        depth: usize,
        state: u32,
        first_col: Option<usize>,
        full: u32,
        f: &mut impl FnMut(usize, usize),
    ) {
        if depth == n - 1 {
            // the last row is forced: the unit vector at the single empty column
            let missing = full & !state;
            if missing.count_ones() == 1 {
                let j = missing.trailing_zeros() as usize;
                f(j, first_col.unwrap_or(if j == 0 { n - 1 } else { usize::MAX }));
            }
            return;
        }
        let options: Vec<(bool, u32)> = table.rows_for(state).iter().map(|(r, s)| (r[0] == 1, *s)).collect();
        for (starts, next) in options {
            let fc = if first_col.is_none() && starts { Some(depth) } else { first_col };
            rec(table, n, depth + 1, next, fc, full, f);
        }
    }
    rec(&mut table, n, 1, 1 << first, first_col, full, &mut f);
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RefinedKind {
    /// i = first-row +1 column, j = last-row +1 column.
    FirstLast,
    /// i = first-row +1 column, k = first-column +1 row.
    FirstRowFirstCol,
}

/// A table of refined ASM counts, 1-based in the text forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedTable {
    pub n: usize,
    pub kind: RefinedKind,
    pub counts: Vec<Vec<BigUint>>,
}

#[derive(Serialize)]
struct RefinedJson {
    n: usize,
    kind: RefinedKind,
    counts: Vec<Vec<serde_json::Value>>,
}

fn number(v: &BigUint) -> serde_json::Value {
    match v.to_u64() {
        Some(x) => serde_json::Value::from(x),
        None => serde_json::Value::from(v.to_string()),
    }
}

impl RefinedTable {
    pub fn get(&self, i: usize, j: usize) -> &BigUint {
        &self.counts[i][j]
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().flatten().sum()
    }

    pub fn row_sum(&self, i: usize) -> BigUint {
        self.counts[i].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> BigUint {
        self.counts.iter().map(|r| &r[j]).sum()
    }

    pub fn to_int_matrix(&self) -> Matrix<BigInt> {
        Matrix::from_fn(self.n, self.n, |i, j| BigInt::from(self.counts[i][j].clone()))
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.to_int_matrix()).expect("non-empty square table")
    }

    /// 𝒜_{ij} = 𝒜_{n+1−j, n+1−i}.
    pub fn is_persymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| self.counts[i][j] == self.counts[n - 1 - j][n - 1 - i]))
    }

    /// Marginal and corner identities of the first/last-row table; returns
    /// the violated ones.
    pub fn invariant_violations(&self) -> Vec<String> {
        let n = self.n;
        let mut bad = Vec::new();
        let an = count_formula(n);
        if self.total() != an {
            bad.push(format!("total {} != A_{n} = {an}", self.total()));
        }
        if n >= 2 {
            let a1 = count_formula(n - 1);
            for (name, v) in [
                ("first row", self.row_sum(0)),
                ("last row", self.row_sum(n - 1)),
                ("first column", self.col_sum(0)),
                ("last column", self.col_sum(n - 1)),
            ] {
                if v != a1 {
                    bad.push(format!("{name} sum {v} != A_{} = {a1}", n - 1));
                }
            }
            let a2 = count_formula(n - 2);
            if self.kind == RefinedKind::FirstLast {
                for (name, v) in [("(n,1)", &self.counts[n - 1][0]), ("(1,n)", &self.counts[0][n - 1])] {
                    if v != &a2 {
                        bad.push(format!("corner {name} = {v} != A_{} = {a2}", n - 2));
                    }
                }
            }
        }
        bad
    }

    pub fn to_csv(&self) -> String {
        let label = match self.kind {
            RefinedKind::FirstLast => "j",
            RefinedKind::FirstRowFirstCol => "k",
        };
        let mut out = format!("i\\{label}");
        for j in 1..=self.n {
            out.push_str(&format!(",{j}"));
        }
        out.push('\n');
        for (i, row) in self.counts.iter().enumerate() {
            out.push_str(&(i + 1).to_string());
            for c in row {
                out.push_str(&format!(",{c}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let doc = RefinedJson {
            n: self.n,
            kind: self.kind,
            counts: self.counts.iter().map(|r| r.iter().map(number).collect()).collect(),
        };
        serde_json::to_value(doc).expect("serializable")
    }
}

impl fmt::Display for RefinedTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.counts {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>4}")).collect();
            writeln!(f, "{}", cells.join(""))?;
        }
        Ok(())
    }
}

fn shard_tables(n: usize, exec: Exec) -> Vec<(Vec<u64>, Vec<u64>)> {
    exec.map((0..n).collect(), |first| {
        let mut last = vec![0u64; n];
        let mut col = vec![0u64; n];
        visit_shard(n, first, |j, k| {
            last[j] += 1;
            col[k] += 1;
        });
        (last, col)
    })
}

/// 𝒜ⁿ_{ij}: ASMs with first-row +1 in column i and last-row +1 in column j.
/// The search is sharded over the first row.
pub fn refined_matrix(n: usize, opts: EnumOptions, exec: Exec) -> Result<RefinedTable, AsmError> {
    opts.admit(n)?;
    let counts = shard_tables(n, exec)
        .into_iter()
        .map(|(last, _)| last.into_iter().map(BigUint::from).collect())
        .collect();
    Ok(RefinedTable { n, kind: RefinedKind::FirstLast, counts })
}

/// ℬⁿ_{ik}: ASMs with first-row +1 in column i and first-column +1 in row k.
pub fn refined_rowcol(n: usize, opts: EnumOptions, exec: Exec) -> Result<RefinedTable, AsmError> {
    opts.admit(n)?;
    let counts = shard_tables(n, exec)
        .into_iter()
        .map(|(_, col)| col.into_iter().map(BigUint::from).collect())
        .collect();
    Ok(RefinedTable { n, kind: RefinedKind::FirstRowFirstCol, counts })
}

/// Both tables computed from the plain enumeration stream, for cross-checks.
pub fn refined_by_stream(n: usize, opts: EnumOptions) -> Result<(RefinedTable, RefinedTable), AsmError> {
    let mut a = vec![vec![BigUint::from(0u32); n]; n];
    let mut b = vec![vec![BigUint::from(0u32); n]; n];
    for asm in enumerate(n, opts)? {
        a[asm.first_row_one()][asm.last_row_one()] += 1u32;
        b[asm.first_row_one()][asm.first_col_one()] += 1u32;
    }
    Ok((
        RefinedTable { n, kind: RefinedKind::FirstLast, counts: a },
        RefinedTable { n, kind: RefinedKind::FirstRowFirstCol, counts: b },
    ))
}

/// det 𝒜ⁿ and (−A_{n−1})^{n−3}, the latter as a rational.
pub fn theorem1_values(n: usize, opts: EnumOptions, exec: Exec) -> Result<(BigInt, BigRat), AsmError> {
    if n < 2 {
        return Err(AsmError::Invalid("the determinant identity needs n >= 2".into()));
    }
    let det = refined_matrix(n, opts, exec)?.determinant();
    let base = BigRat::from_integer(-BigInt::from(count_formula(n - 1)));
    let e = n as i64 - 3;
    let expected = if e >= 0 { Ring::pow(&base, e as u32) } else { Ring::pow(&base, (-e) as u32).recip() };
    Ok((det, expected))
}

pub fn theorem1_check(n: usize, opts: EnumOptions, exec: Exec) -> Result<bool, AsmError> {
    let (det, expected) = theorem1_values(n, opts, exec)?;
    Ok(BigRat::from_integer(det) == expected)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexType {
    P1,
    M1,
    NW,
    NE,
    SE,
    SW,
}

/// Classifies every entry. A zero is N when the column partial sum above it
/// is 1 (the nearest non-zero entry upwards is a +1), otherwise S; it is W
/// when the row partial sum to its left is 1, otherwise E.
pub fn vertex_types(b: &Asm) -> Vec<Vec<VertexType>> {
    let n = b.n;
    let mut col = vec![0i8; n];
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = 0i8;
        let mut types = Vec::with_capacity(n);
        for j in 0..n {
            let v = b.get(i, j);
            let t = match v {
                1 => VertexType::P1,
                -1 => VertexType::M1,
                _ => match (col[j] == 1, row == 1) {
                    (true, true) => VertexType::NW,
                    (true, false) => VertexType::NE,
                    (false, false) => VertexType::SE,
                    (false, true) => VertexType::SW,
                },
            };
            types.push(t);
            row += v;
            col[j] += v;
        }
        out.push(types);
    }
    out
}

/// Six-vertex weight of a vertex type at a point with x·y = 1, so that
/// √(xy) = 1.
pub fn vertex_weight(t: VertexType, q: &CycloNum, x: &CycloNum, y: &CycloNum) -> CycloNum {
    let qinv = q.inv().expect("root of unity");
    match t {
        VertexType::P1 | VertexType::M1 => q.sub_ref(&qinv),
        VertexType::NW | VertexType::SE => qinv.mul_ref(x).sub_ref(&q.mul_ref(y)),
        VertexType::NE | VertexType::SW => y.sub_ref(x),
    }
}

/// Partition function Z_n at q = ζ_3, x_i = q^{−1}, y_j = q, and the
/// expected value A_n · (q − q²)^{n²}.
pub fn combinatorial_point_values(n: usize, opts: EnumOptions) -> Result<(CycloNum, CycloNum, bool), AsmError> {
    let q = CycloNum::zeta(3);
    let x = q.inv().unwrap();
    let y = q.clone();
    let target = q.sub_ref(&q.mul_ref(&q));
    let types = [VertexType::P1, VertexType::M1, VertexType::NW, VertexType::NE, VertexType::SE, VertexType::SW];
    let weights: HashMap<VertexType, CycloNum> = types.iter().map(|&t| (t, vertex_weight(t, &q, &x, &y))).collect();
    let all_equal = weights.values().all(|w| *w == target);

    // group configurations by their multiset of vertex types
    let mut histogram: HashMap<[u32; 6], u64> = HashMap::new();
    let mut count = 0u64;
    for asm in enumerate(n, opts)? {
        let mut h = [0u32; 6];
        for t in vertex_types(&asm).into_iter().flatten() {
            h[t as usize] += 1;
        }
        *histogram.entry(h).or_default() += 1;
        count += 1;
    }
    let mut z = CycloNum::zero();
    for (h, c) in histogram {
        let mut term = CycloNum::from_i64(c as i64);
        for (t, &e) in types.iter().zip(&h) {
            term = term.mul_ref(&weights[t].pow(e));
        }
        z = z.add_ref(&term);
    }
    let expected = CycloNum::from_i64(count as i64).mul_ref(&target.pow((n * n) as u32));
    Ok((z, expected, all_equal))
}

pub fn combinatorial_point_check(n: usize, opts: EnumOptions) -> Result<bool, AsmError> {
    let (z, expected, all_equal) = combinatorial_point_values(n, opts)?;
    let count = BigInt::from(count_formula(n));
    let by_formula = CycloNum::rational(1, BigRat::from_integer(count)).mul_ref(&CycloNum::zeta(3).sub_ref(&CycloNum::root_power(3, 2)).pow((n * n) as u32));
    Ok(all_equal && z == expected && z == by_formula)
}

/// A_n · 3^{C(n,2)} = s_{λ_n}(1^{2n}), with A_n counted by enumeration.
pub fn schur_count_check(n: usize, opts: EnumOptions) -> Result<bool, AsmError> {
    let count = enumerate(n, opts)?.count();
    let lambda = two_staircase(StaircaseParams::new(n as u32, 1, 0)?);
    let ones = vec![BigRat::one(); 2 * n];
    let s = schur_specialized(&lambda, &ones)?;
    let lhs = BigRat::from_integer(BigInt::from(count) * BigInt::from(3u64.pow(binomial(n as u64, 2) as u32)));
    Ok(lhs == s)
}

fn uv_vars() -> Vars {
    Vars::new(["u", "v"])
}

/// 𝒜_n(u, v) = Σ 𝒜ⁿ_{ij} u^{i−1} v^{n−j}.
pub fn double_refined_lhs(table: &RefinedTable) -> Poly<CycloNum> {
    let n = table.n;
    let vars = uv_vars();
    Poly::from_terms(
        &vars,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter_map(|(i, j)| {
            let c = &table.counts[i][j];
            (*c != BigUint::from(0u32)).then(|| {
                (
                    Monomial::new([i as u32, (n - 1 - j) as u32]),
                    CycloNum::from(BigRat::from_integer(BigInt::from(c.clone()))),
                )
            })
        }),
    )
}

/// 3^{−C(n,2)} q^{2(n−1)} (q+u)^{n−1}(q+v)^{n−1} s_{λ_n}(a, b, 1, …, 1) with
/// a = (1+qu)/(q+u), b = (1+qv)/(q+v), q = ζ_3.
///
/// s is computed first as a polynomial in formal a, b by Jacobi–Trudi; its
/// degree in each is at most n−1, so every term a^i b^j turns into the
/// polynomial (1+qu)^i (q+u)^{n−1−i} (1+qv)^j (q+v)^{n−1−j}.
pub fn double_refined_rhs(n: usize) -> Result<Poly<CycloNum>, AsmError> {
    let ab = Vars::new(["a", "b"]);
    let mut values = vec![Poly::<BigRat>::var(&ab, 0), Poly::var(&ab, 1)];
    values.extend(std::iter::repeat_n(Poly::one(&ab), 2 * n - 2));
    let lambda = two_staircase(StaircaseParams::new(n as u32, 1, 0)?);
    let s = schur_specialized(&lambda, &values)?;

    let vars = uv_vars();
    let q = Poly::constant(&vars, CycloNum::zeta(3));
    let one = Poly::<CycloNum>::one(&vars);
    let u = Poly::var(&vars, 0);
    let v = Poly::var(&vars, 1);
    let num_u = &one + &(&q * &u);
    let den_u = &q + &u;
    let num_v = &one + &(&q * &v);
    let den_v = &q + &v;
    let top = (n - 1) as u32;
    let mut out = Poly::zero(&vars);
    for (m, c) in s.terms() {
        let (i, j) = (m.exps()[0], m.exps()[1]);
        assert!(i <= top && j <= top, "degree bound of the Jacobi–Trudi expansion");
        let t = &(&num_u.pow(i) * &den_u.pow(top - i)) * &(&num_v.pow(j) * &den_v.pow(top - j));
        out = &out + &t.scale(&CycloNum::from(c.clone()));
    }
    let three = BigRat::from_integer(BigInt::from(3u64.pow(binomial(n as u64, 2) as u32)));
    let prefactor = CycloNum::root_power(3, 2 * (n as i64 - 1)).mul_ref(&CycloNum::from(three.recip()));
    Ok(out.scale(&prefactor))
}

pub fn double_refined_check(n: usize, opts: EnumOptions, exec: Exec) -> Result<bool, AsmError> {
    let table = refined_matrix(n, opts, exec)?;
    Ok(double_refined_lhs(&table) == double_refined_rhs(n)?)
}

/// Δ((1+qu_i)/(q+u_i)) ∏(q+u_i)^{n−1} = Δ(u)(q²−1)^{C(n,2)} over Q(ζ_3),
/// checked twice: through the pairwise product with denominators cleared,
/// and through the row-homogenized Vandermonde determinant
/// det((1+qu_i)^{n−j}(q+u_i)^{j−1}).
pub fn vander_substitution_check(n: usize) -> Result<bool, AsmError> {
    if n == 0 {
        return Err(AsmError::ZeroSize);
    }
    let vars = Vars::indexed("u", n);
    let q = CycloNum::zeta(3);
    let qc = Poly::constant(&vars, q.clone());
    let one = Poly::<CycloNum>::one(&vars);
    let u: Vec<Poly<CycloNum>> = (0..n).map(|i| Poly::var(&vars, i)).collect();
    let num: Vec<Poly<CycloNum>> = u.iter().map(|x| &one + &(&qc * x)).collect();
    let den: Vec<Poly<CycloNum>> = u.iter().map(|x| &qc + x).collect();

    let mut pairwise = one.clone();
    for i in 0..n {
        for j in i + 1..n {
            pairwise = &pairwise * &(&(&num[i] * &den[j]) - &(&num[j] * &den[i]));
        }
    }
    let homogenized = Matrix::from_fn(n, n, |i, j| &num[i].pow((n - 1 - j) as u32) * &den[i].pow(j as u32));
    let det = determinant(&homogenized).map_err(|e| AsmError::Invalid(e.to_string()))?;

    let c = q.mul_ref(&q).sub_ref(&CycloNum::one()).pow(binomial(n as u64, 2) as u32);
    let expected = vandermonde_product(&u).unwrap().scale(&c);
    Ok(pairwise == expected && det == expected)
}
