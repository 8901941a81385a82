//! Exact matrices over commutative rings (integers, rationals, cyclotomic
//! numbers, polynomials), determinants, Vandermonde builders and the
//! compound-determinant identities: minor expansion of a sum of matrices,
//! the Bazin–Reiss–Picquet factorization and its divisibility corollary.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exactnum::{binomial_signed, BigRat, Coeff, Ring};
use crate::multipoly::{Poly, PolyError, Vars};
use crate::symfunc::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrices of different sizes")]
    SizeMismatch,
    #[error("bad shape: {0}")]
    BadShape(String),
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },
    #[error("determinant of an empty matrix")]
    Empty,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Row-major matrix over a ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type PolyMatrix<F> = Matrix<Poly<F>>;

impl<R: Ring> Matrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self, LinalgError> {
        if entries.len() != rows * cols {
            return Err(LinalgError::LengthMismatch { expected: rows * cols, got: entries.len() });
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::BadShape("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `(self | other)`: all columns of `self` followed by all columns of `other`.
    pub fn hcat(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows {
            return Err(LinalgError::SizeMismatch);
        }
        Ok(Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        }))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::SizeMismatch);
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a.add_ref(b)).collect(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    fn square_size(&self) -> Result<usize, LinalgError> {
        if !self.is_square() {
            return Err(LinalgError::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows == 0 {
            return Err(LinalgError::Empty);
        }
        Ok(self.rows)
    }
}

impl<R: Ring + fmt::Display> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Exact determinant.
///
/// Fraction-free Bareiss elimination, taking the first row with a non-zero
/// pivot when a swap is needed. If an intermediate division is ever
/// inexact the memoized Laplace expansion is used instead.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> Result<R, LinalgError> {
    m.square_size()?;
    match bareiss(m) {
        Some(d) => Ok(d),
        None => determinant_laplace(m),
    }
}

fn bareiss<R: Ring>(m: &Matrix<R>) -> Option<R> {
    let n = m.rows;
    let mut a = m.clone();
    let mut negate = false;
    let mut prev: Option<R> = None;
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let r = (k + 1..n).find(|&r| !a.get(r, k).is_zero());
            match r {
                Some(r) => {
                    a.swap_rows(k, r);
                    negate = !negate;
                }
                None => return Some(m.get(0, 0).zero_like()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let mut v = a.get(i, j).mul_ref(&pivot);
                if !aik.is_zero() {
                    v = v.sub_ref(&aik.mul_ref(a.get(k, j)));
                }
                if let Some(p) = &prev {
                    v = v.div_exact(p)?;
                }
                a.set(i, j, v);
            }
        }
        prev = Some(pivot);
    }
    let d = a.get(n - 1, n - 1).clone();
    Some(if negate { d.neg_ref() } else { d })
}

/// Laplace expansion along successive rows, memoized on the set of columns
/// already used.
pub fn determinant_laplace<R: Ring>(m: &Matrix<R>) -> Result<R, LinalgError> {
    let n = m.square_size()?;
    if n > 63 {
        return Err(LinalgError::BadShape("Laplace expansion limited to 63 columns".into()));
    }
    let mut memo: HashMap<u64, R> = HashMap::new();
    Ok(laplace_rec(m, 0, 0, &mut memo))
}

fn laplace_rec<R: Ring>(m: &Matrix<R>, row: usize, used: u64, memo: &mut HashMap<u64, R>) -> R {
    let n = m.rows;
    if row == n {
        return m.get(0, 0).one_like();
    }
    if let Some(v) = memo.get(&used) {
        return v.clone();
    }
    let mut acc = m.get(0, 0).zero_like();
    let mut position = 0;
    for j in 0..n {
        if used & (1 << j) != 0 {
            continue;
        }
        let e = m.get(row, j);
        if !e.is_zero() {
            let minor = laplace_rec(m, row + 1, used | (1 << j), memo);
            let t = e.mul_ref(&minor);
            acc = if position % 2 == 0 { acc.add_ref(&t) } else { acc.sub_ref(&t) };
        }
        position += 1;
    }
    memo.insert(used, acc.clone());
    acc
}

/// Vandermonde matrix with entry (i, j) = points_i^(n-1-j) (0-based), whose
/// determinant is ∏_{i<j} (p_i − p_j).
pub fn vandermonde<R: Ring>(points: &[R]) -> Result<Matrix<R>, LinalgError> {
    let zeros = Partition::zeros(points.len());
    shifted_vandermonde(&zeros, points)
}

/// Entry (i, j) = points_i^(λ_j + ℓ − j) with 1-based j and ℓ = length(λ).
pub fn shifted_vandermonde<R: Ring>(lambda: &Partition, points: &[R]) -> Result<Matrix<R>, LinalgError> {
    let l = lambda.len();
    if points.len() != l {
        return Err(LinalgError::LengthMismatch { expected: l, got: points.len() });
    }
    let exps = lambda.shifted_exponents();
    Ok(Matrix::from_fn(l, l, |i, j| points[i].pow(exps[j])))
}

/// ∏_{i<j} (p_i − p_j), computed as a product.
pub fn vandermonde_product<R: Ring>(points: &[R]) -> Option<R> {
    let first = points.first()?;
    let mut acc = first.one_like();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            acc = acc.mul_ref(&points[i].sub_ref(&points[j]));
        }
    }
    Some(acc)
}

/// Signature of a permutation given as an image array.
pub fn permutation_sign(perm: &[usize]) -> i8 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// ε(𝓘, 𝓙): sign of the permutation sending the concatenated blocks of
/// `blocks_i` (each in increasing order) onto those of `blocks_j`.
pub fn block_reorder_sign(n: usize, blocks_i: &[Vec<usize>], blocks_j: &[Vec<usize>]) -> i8 {
    let li: Vec<usize> = blocks_i.iter().flatten().copied().collect();
    let lj: Vec<usize> = blocks_j.iter().flatten().copied().collect();
    let mut tau = vec![0; n];
    for (a, b) in li.iter().zip(&lj) {
        tau[*a] = *b;
    }
    permutation_sign(&tau)
}

fn blocks_of(assignment: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut blocks = vec![Vec::new(); k];
    for (i, &a) in assignment.iter().enumerate() {
        blocks[a].push(i);
    }
    blocks
}

/// Evaluates both sides of the minor expansion of a sum of matrices:
/// det(Σ_a M^(a)) = Σ_{𝓘~𝓙} ε(𝓘,𝓙) ∏_a det M^(a)_{I_a, J_a}.
/// Returns `(lhs, rhs)`.
pub fn minor_expansion_sides<R: Ring>(summands: &[Matrix<R>]) -> Result<(R, R), LinalgError> {
    let first = summands.first().ok_or(LinalgError::SizeMismatch)?;
    let n = first.square_size()?;
    if summands.iter().any(|m| m.rows != n || m.cols != n) {
        return Err(LinalgError::SizeMismatch);
    }
    let k = summands.len();
    let mut total = first.clone();
    for m in &summands[1..] {
        total = total.try_add(m)?;
    }
    let lhs = determinant(&total)?;

    let one = first.get(0, 0).one_like();
    let assignments = all_assignments(n, k);
    let mut minors: HashMap<(usize, Vec<usize>, Vec<usize>), R> = HashMap::new();
    let mut rhs = one.zero_like();
    for bi in &assignments {
        let blocks_i = blocks_of(bi, k);
        for bj in &assignments {
            let blocks_j = blocks_of(bj, k);
            if blocks_i.iter().zip(&blocks_j).any(|(x, y)| x.len() != y.len()) {
                continue;
            }
            let mut term = one.clone();
            for a in 0..k {
                if blocks_i[a].is_empty() {
                    continue;
                }
                let key = (a, blocks_i[a].clone(), blocks_j[a].clone());
                let d = match minors.get(&key) {
                    Some(d) => d.clone(),
                    None => {
                        let d = determinant(&summands[a].submatrix(&blocks_i[a], &blocks_j[a]))?;
                        minors.insert(key, d.clone());
                        d
                    }
                };
                term = term.mul_ref(&d);
                if term.is_zero() {
                    break;
                }
            }
            if term.is_zero() {
                continue;
            }
            rhs = if block_reorder_sign(n, &blocks_i, &blocks_j) > 0 { rhs.add_ref(&term) } else { rhs.sub_ref(&term) };
        }
    }
    Ok((lhs, rhs))
}

pub fn minor_expansion_sum_check<R: Ring>(summands: &[Matrix<R>]) -> Result<bool, LinalgError> {
    let (lhs, rhs) = minor_expansion_sides(summands)?;
    Ok(lhs == rhs)
}

fn all_assignments(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..k).map(move |a| {
                    let mut p = prefix.clone();
                    p.push(a);
                    p
                })
            })
            .collect();
    }
    out
}

/// p-subsets of {0..n-1} in lexicographic order.
pub fn subsets_lex(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, p, &mut Vec::new(), &mut out);
    out
}

/// Both sides of the Bazin–Reiss–Picquet identity
/// det D = det(A|C)^C(n−1,p) · det(B|C)^C(n−1,p−1), with the subsets of
/// S_{n,p} indexing D taken in the order given by `ordering` (a permutation
/// of the lexicographic positions; `None` means lexicographic).
pub fn bazin_sides<R: Ring>(
    p: usize,
    a: &Matrix<R>,
    b: &Matrix<R>,
    c: &Matrix<R>,
    ordering: Option<&[usize]>,
) -> Result<(R, R), LinalgError> {
    let m = a.rows;
    let n = a.cols;
    if !(m >= n && n >= p && n >= 1) {
        return Err(LinalgError::BadShape(format!("need m >= n >= p, n >= 1; got m={m}, n={n}, p={p}")));
    }
    if b.rows != m || b.cols != n || c.rows != m || c.cols != m - n {
        return Err(LinalgError::BadShape("B must be m×n and C m×(m−n)".into()));
    }
    let ac = a.hcat(c)?;
    let bc = b.hcat(c)?;
    let lex = subsets_lex(n, p);
    let sets: Vec<&Vec<usize>> = match ordering {
        Some(ord) => {
            if ord.len() != lex.len() {
                return Err(LinalgError::BadShape("ordering must permute S_{n,p}".into()));
            }
            ord.iter().map(|&i| &lex[i]).collect()
        }
        None => lex.iter().collect(),
    };
    let size = sets.len();
    let mut d = Vec::with_capacity(size * size);
    for set_i in &sets {
        for set_j in &sets {
            let mut mij = ac.clone();
            for (&col_i, &col_j) in set_i.iter().zip(set_j.iter()) {
                for h in 0..m {
                    mij.set(h, col_i, b.get(h, col_j).clone());
                }
            }
            d.push(determinant(&mij)?);
        }
    }
    let lhs = determinant(&Matrix::new(size, size, d)?)?;
    let e1 = binomial_signed(n as i64 - 1, p as i64) as u32;
    let e2 = binomial_signed(n as i64 - 1, p as i64 - 1) as u32;
    let rhs = determinant(&ac)?.pow(e1).mul_ref(&determinant(&bc)?.pow(e2));
    Ok((lhs, rhs))
}

pub fn bazin_compound_check<R: Ring>(
    p: usize,
    a: &Matrix<R>,
    b: &Matrix<R>,
    c: &Matrix<R>,
) -> Result<bool, LinalgError> {
    let (lhs, rhs) = bazin_sides(p, a, b, c, None)?;
    Ok(lhs == rhs)
}

/// Divisibility corollary of Bazin's theorem: with P = Δ_λ (a Slater
/// determinant in m arguments), the n×n determinant with entries
/// Σ_a u_i^a v_j^a · P(z∖z_i, y_j) is divisible by P(z)^(n−k).
///
/// `u` and `v` are k×n tables of rational scalars.
pub fn divisibility_corollary_check(
    lambda: &Partition,
    n: usize,
    u: &[Vec<BigRat>],
    v: &[Vec<BigRat>],
) -> Result<bool, LinalgError> {
    let m = lambda.len();
    let k = u.len();
    if !(m >= n && n >= k && n >= 1) || v.len() != k || u.iter().chain(v).any(|row| row.len() != n) {
        return Err(LinalgError::BadShape(format!("need m >= n >= k, u and v k×n (m={m}, n={n}, k={k})")));
    }
    let t = Vars::indexed("t", m);
    let tv: Vec<Poly<BigRat>> = (0..m).map(|i| Poly::var(&t, i)).collect();
    let slater = determinant(&shifted_vandermonde(lambda, &tv)?)?;

    let ctx = Vars::indexed("z", m).concat(&Vars::indexed("y", n));
    let z: Vec<Poly<BigRat>> = (0..m).map(|i| Poly::var(&ctx, i)).collect();
    let y: Vec<Poly<BigRat>> = (0..n).map(|j| Poly::var(&ctx, m + j)).collect();
    let mut dropped: Vec<Vec<Poly<BigRat>>> = Vec::with_capacity(n);
    for i in 0..n {
        dropped.push(
            (0..n)
                .map(|j| {
                    let mut args: Vec<Poly<BigRat>> =
                        z.iter().enumerate().filter(|(r, _)| *r != i).map(|(_, p)| p.clone()).collect();
                    args.push(y[j].clone());
                    slater.compose(&ctx, &args)
                })
                .collect::<Result<_, _>>()?,
        );
    }
    let mat = Matrix::from_fn(n, n, |i, j| {
        let s: BigRat = (0..k).fold(BigRat::zero(), |acc, a| acc + &u[a][i] * &v[a][j]);
        dropped[i][j].scale(&s)
    });
    let det = determinant(&mat)?;
    let pz = slater.compose(&ctx, &z)?;
    Ok(det.exact_divide(&pz.pow((n - k) as u32)).is_ok())
}

/// Checks det(P(u_i, v_j)) = Δ(u) Δ(v) det(P|_{[u^{i−1} v^{j−1}]}) for a
/// bivariate P of degree at most n−1 in each variable.
pub fn coefficient_factorization_check(
    p: &Poly<BigRat>,
    u_points: &[BigRat],
    v_points: &[BigRat],
) -> Result<bool, LinalgError> {
    let n = u_points.len();
    if p.arity() != 2 || v_points.len() != n || n == 0 {
        return Err(LinalgError::BadShape("P must be bivariate with n points per variable".into()));
    }
    let bound = n as u32 - 1;
    for var in 0..2 {
        let deg = p.degree_in(var);
        if deg > bound {
            return Err(LinalgError::DegreeTooHigh { degree: deg, bound });
        }
    }
    let values = Matrix::from_fn(n, n, |i, j| {
        p.eval(&[u_points[i].clone(), v_points[j].clone()]).expect("bivariate evaluation")
    });
    let grid = p.coefficient_grid(0, 1, n, n);
    let coeffs = Matrix::from_fn(n, n, |i, j| grid[i][j].as_constant().expect("constant coefficient"));
    let lhs = determinant(&values)?;
    let rhs = vandermonde_product(u_points).unwrap() * vandermonde_product(v_points).unwrap() * determinant(&coeffs)?;
    Ok(lhs == rhs)
}

/// Integer matrix from nested i64 rows.
pub fn int_matrix(rows: &[Vec<i64>]) -> Matrix<BigInt> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
        .expect("rectangular rows")
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, CycloNum};
    use rand::{Rng as _, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn z3() -> (Vars, Vec<Poly<BigRat>>) {
        let v = Vars::indexed("z", 3);
        let z = (0..3).map(|i| Poly::var(&v, i)).collect();
        (v, z)
    }

    fn random_int(rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix<BigInt> {
        Matrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-9..=9)))
    }

    #[test]
    fn identity_and_small_determinants() {
        let id = int_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(determinant(&id).unwrap(), BigInt::from(1));
        let (v, z) = z3();
        let one = Poly::one(&v);
        let m = Matrix::from_rows(vec![vec![z[0].clone(), one.clone()], vec![z[1].clone(), one]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), &z[0] - &z[1]);
        let rect = int_matrix(&[vec![1, 2]]);
        assert_eq!(determinant(&rect), Err(LinalgError::NotSquare { rows: 1, cols: 2 }));
    }

    #[test]
    fn vandermonde_determinant() {
        let (_, z) = z3();
        let det = determinant(&vandermonde(&z).unwrap()).unwrap();
        let expect = &(&(&z[0] - &z[1]) * &(&z[0] - &z[2])) * &(&z[1] - &z[2]);
        assert_eq!(det, expect);
        assert_eq!(determinant_laplace(&vandermonde(&z).unwrap()).unwrap(), expect);
    }

    #[test]
    fn shifted_vandermonde_examples() {
        let v = Vars::indexed("z", 2);
        let z: Vec<Poly<BigRat>> = (0..2).map(|i| Poly::var(&v, i)).collect();
        let m = shifted_vandermonde(&Partition::new(vec![0, 0]).unwrap(), &z).unwrap();
        assert_eq!(m.get(0, 0), &z[0]);
        assert_eq!(m.get(0, 1), &Poly::one(&v));
        let m = shifted_vandermonde(&Partition::new(vec![1, 0]).unwrap(), &z).unwrap();
        assert_eq!(determinant(&m).unwrap(), &(&z[0] * &z[0]) - &(&z[1] * &z[1]));
        assert!(matches!(
            shifted_vandermonde(&Partition::new(vec![1]).unwrap(), &z),
            Err(LinalgError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn bareiss_matches_laplace_on_random_polynomial_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let v = Vars::indexed("z", 2);
        for n in 1..=5 {
            let m = Matrix::from_fn(n, n, |_, _| {
                let mut p = Poly::zero(&v);
                for _ in 0..2 {
                    let e0 = rng.gen_range(0..3);
                    let e1 = rng.gen_range(0..3);
                    let c = rng.gen_range(-3..=3);
                    p = &p + &Poly::monomial(&v, crate::Monomial::new([e0, e1]), rat(c));
                }
                p
            });
            assert_eq!(determinant(&m).unwrap(), determinant_laplace(&m).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn row_swap_negates() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let m = random_int(&mut rng, 4, 4);
            let mut s = m.clone();
            s.swap_rows(0, 2);
            assert_eq!(determinant(&s).unwrap(), -determinant(&m).unwrap());
        }
    }

    #[test]
    fn cyclotomic_determinant() {
        let q = CycloNum::zeta(3);
        let one = CycloNum::one();
        let m = Matrix::from_rows(vec![vec![one.clone(), q.clone()], vec![q.clone(), one.clone()]]).unwrap();
        // 1 - q^2
        assert_eq!(determinant(&m).unwrap(), one.sub_ref(&q.mul_ref(&q)));
    }

    #[test]
    fn block_sign_examples() {
        // I = ({0},{1}), J = ({1},{0}) is a transposition
        assert_eq!(block_reorder_sign(2, &[vec![0], vec![1]], &[vec![1], vec![0]]), -1);
        assert_eq!(block_reorder_sign(3, &[vec![0, 2], vec![1]], &[vec![0, 2], vec![1]]), 1);
    }

    #[test]
    fn minor_expansion_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let single = vec![random_int(&mut rng, 3, 3)];
        assert!(minor_expansion_sum_check(&single).unwrap());
        for (k, n) in [(2, 2), (3, 3), (2, 4)] {
            let ms: Vec<_> = (0..k).map(|_| random_int(&mut rng, n, n)).collect();
            assert!(minor_expansion_sum_check(&ms).unwrap(), "k={k} n={n}");
        }
        let bad = vec![random_int(&mut rng, 2, 2), random_int(&mut rng, 3, 3)];
        assert_eq!(minor_expansion_sum_check(&bad), Err(LinalgError::SizeMismatch));
    }

    #[test]
    fn bazin_small_cases() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (m, n, p) in [(3, 2, 0), (3, 2, 1), (4, 3, 2), (3, 3, 2)] {
            let a = random_int(&mut rng, m, n);
            let b = random_int(&mut rng, m, n);
            let c = random_int(&mut rng, m, m - n);
            assert!(bazin_compound_check(p, &a, &b, &c).unwrap(), "(m,n,p)=({m},{n},{p})");
        }
        let a = random_int(&mut rng, 2, 3);
        let c = random_int(&mut rng, 2, 0);
        assert!(matches!(bazin_compound_check(1, &a, &a, &c), Err(LinalgError::BadShape(_))));
    }

    #[test]
    fn bazin_p_zero_is_a_single_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = random_int(&mut rng, 3, 2);
        let b = random_int(&mut rng, 3, 2);
        let c = random_int(&mut rng, 3, 1);
        let (lhs, rhs) = bazin_sides(0, &a, &b, &c, None).unwrap();
        assert_eq!(lhs, determinant(&a.hcat(&c).unwrap()).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bazin_ordering_independent() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let a = random_int(&mut rng, 4, 3);
        let b = random_int(&mut rng, 4, 3);
        let c = random_int(&mut rng, 4, 1);
        let (lex, _) = bazin_sides(2, &a, &b, &c, None).unwrap();
        let (rev, _) = bazin_sides(2, &a, &b, &c, Some(&[2, 0, 1])).unwrap();
        assert_eq!(lex, rev);
    }

    #[test]
    fn subsets_in_lex_order() {
        assert_eq!(subsets_lex(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets_lex(2, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn divisibility_corollary_shapes() {
        let r = |x: i64| rat(x);
        // k = n: exponent zero
        let lam = Partition::zeros(2);
        assert!(divisibility_corollary_check(&lam, 2, &[vec![r(1), r(2)], vec![r(3), r(-1)]], &[vec![r(2), r(1)], vec![r(1), r(5)]]).unwrap());
        let lam = Partition::zeros(3);
        assert!(divisibility_corollary_check(&lam, 2, &[vec![r(2), r(-3)]], &[vec![r(1), r(4)]]).unwrap());
        let lam = Partition::new(vec![1, 0, 0, 0]).unwrap();
        assert!(divisibility_corollary_check(
            &lam,
            3,
            &[vec![r(1), r(2), r(-1)], vec![r(3), r(1), r(2)]],
            &[vec![r(-2), r(1), r(1)], vec![r(1), r(1), r(3)]],
        )
        .unwrap());
    }

    #[test]
    fn lemma_coefficient_factorization() {
        let v = Vars::new(["u", "v"]);
        let u = Poly::<BigRat>::var(&v, 0);
        let w = Poly::<BigRat>::var(&v, 1);
        let uv = &u * &w;
        assert!(coefficient_factorization_check(&uv, &[rat(0), rat(1)], &[rat(0), rat(1)]).unwrap());
        let p = &Poly::one(&v) + &uv;
        assert!(coefficient_factorization_check(&p, &[rat(2), rat(-5)], &[rat(3), rat(7)]).unwrap());
        let s = &u + &w;
        let sq = &s * &s;
        assert!(coefficient_factorization_check(&sq, &[rat(1), rat(4), rat(-2)], &[rat(0), rat(3), rat(5)]).unwrap());
        assert_eq!(
            coefficient_factorization_check(&sq, &[rat(1), rat(2)], &[rat(0), rat(3)]),
            Err(LinalgError::DegreeTooHigh { degree: 2, bound: 1 })
        );
    }
}
