use std::collections::HashMap;

use crate::exactnum::{Coeff, CycloNum, Ring};
use crate::multipoly::{Monomial, Poly, Vars};

use super::schur::{monomial_symmetric, schur_bialternant, schur_specialized};
use super::wheel::substitute_scaled_w;
use super::{m_staircase, Partition, SymError};

const MAX_BASIS: usize = 500;
const MAX_ORDER: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WheelOutcome {
    Vanishes,
    NonZero,
    /// Fewer than m+1 variables: the condition has no instances.
    Vacuous,
}

impl WheelOutcome {
    pub fn passed(self) -> bool {
        !matches!(self, WheelOutcome::NonZero)
    }
}

fn validate_sets(positions: &[u32], exponents: &[u32], big_n: usize, order: u32, size: usize) -> Result<(), SymError> {
    let distinct = |xs: &[u32]| xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x));
    if positions.len() != size || exponents.len() != size {
        return Err(SymError::BadIndices(format!("need {size} positions and {size} exponents")));
    }
    if !distinct(positions) || positions.iter().any(|&p| p == 0 || p as usize > big_n) {
        return Err(SymError::BadIndices(format!("positions {positions:?} must be distinct in 1..={big_n}")));
    }
    if !distinct(exponents) || exponents.iter().any(|&k| k == 0 || k > order) {
        return Err(SymError::BadIndices(format!("exponents {exponents:?} must be distinct in 1..={order}")));
    }
    Ok(())
}

/// (m, ℓ)-wheel condition for s_{N,m,ℓ,λ′} at z_{i_a} = q^{k_a} w, with
/// q = ζ_{ℓ+m}. Positions 1-based, exponents in 1..=ℓ+m.
pub fn m_wheel_check(
    big_n: usize,
    m: usize,
    l: u32,
    lambda_prime: &Partition,
    positions: &[u32],
    exponents: &[u32],
) -> Result<WheelOutcome, SymError> {
    let lambda = m_staircase(big_n, m, l, lambda_prime)?;
    if big_n < m + 1 {
        return Ok(WheelOutcome::Vacuous);
    }
    let order = l + m as u32;
    validate_sets(positions, exponents, big_n, order, m + 1)?;
    let subs: Vec<(usize, CycloNum)> = positions
        .iter()
        .zip(exponents)
        .map(|(&p, &k)| (p as usize - 1, CycloNum::root_power(order, k as i64)))
        .collect();
    let (out, _) = substitute_scaled_w(&schur_bialternant(&lambda), &subs);
    Ok(if out.is_zero() { WheelOutcome::Vanishes } else { WheelOutcome::NonZero })
}

/// Both sides of the m-staircase recursion at z_{i_a} = q^{k_a} w.
pub fn m_recursion_sides(
    big_n: usize,
    m: usize,
    l: u32,
    lambda_prime: &Partition,
    positions: &[u32],
    exponents: &[u32],
) -> Result<(Poly<CycloNum>, Poly<CycloNum>), SymError> {
    let lambda = m_staircase(big_n, m, l, lambda_prime)?;
    let order = l + m as u32;
    validate_sets(positions, exponents, big_n, order, m)?;
    let q = |k: u32| CycloNum::root_power(order, k as i64);
    let subs: Vec<(usize, CycloNum)> = positions.iter().zip(exponents).map(|(&p, &k)| (p as usize - 1, q(k))).collect();
    let (lhs, target) = substitute_scaled_w(&schur_bialternant(&lambda), &subs);

    let roots: Vec<CycloNum> = exponents.iter().map(|&k| q(k)).collect();
    let prefactor = schur_specialized(lambda_prime, &roots)?;
    let w = target.w();
    let mut rhs = w.pow(lambda_prime.weight()).scale(&prefactor);
    for &pos in &target.kept {
        let z = target.z(pos);
        for h in (1..=order).filter(|h| !exponents.contains(h)) {
            rhs = &rhs * &(&z - &w.scale(&q(h)));
        }
    }
    let rest = m_staircase(big_n - m, m, l, lambda_prime)?;
    if !rest.is_empty() {
        let s_rest = schur_bialternant(&rest).lift::<CycloNum>();
        rhs = &rhs * &s_rest.embed(&target.vars, &(0..target.kept.len()).collect::<Vec<_>>());
    }
    Ok((lhs, rhs))
}

pub fn m_recursion_check(
    big_n: usize,
    m: usize,
    l: u32,
    lambda_prime: &Partition,
    positions: &[u32],
    exponents: &[u32],
) -> Result<bool, SymError> {
    let (lhs, rhs) = m_recursion_sides(big_n, m, l, lambda_prime, positions, exponents)?;
    Ok(lhs == rhs)
}

/// (D*, d*, d_m*) for s_{N,m,ℓ,∅}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeTriple {
    pub total: u32,
    pub single: u32,
    /// Degree in any m variables; `None` when m > N.
    pub in_m: Option<u32>,
}

/// N = am + b with 1 ≤ b ≤ m gives (aℓ(m(a−1)/2 + b), aℓ, (N−m)ℓ).
pub fn degree_triple(big_n: usize, m: usize, l: u32) -> Result<DegreeTriple, SymError> {
    if big_n == 0 || m == 0 {
        return Err(SymError::BadParams("N and m must be positive".into()));
    }
    let a = ((big_n - 1) / m) as u32;
    let b = (big_n - (a as usize) * m) as u32;
    let m32 = m as u32;
    let total = l * (m32 * a * a.saturating_sub(1) / 2 + a * b);
    Ok(DegreeTriple { total, single: a * l, in_m: (m <= big_n).then(|| (big_n - m) as u32 * l) })
}

/// Degree triple read off the actual polynomial s_{N,m,ℓ,∅}.
pub fn degree_triple_of_polynomial(big_n: usize, m: usize, l: u32) -> Result<DegreeTriple, SymError> {
    let lambda = m_staircase(big_n, m, l, &Partition::zeros(m))?;
    let s = schur_bialternant(&lambda);
    let single = s.degree_stats(1)?.d_k;
    let in_m = if m <= big_n { Some(s.degree_stats(m)?.d_k) } else { None };
    Ok(DegreeTriple { total: s.total_degree(), single, in_m })
}

fn bounded_partitions(max_len: usize, max_part: u32, max_weight: u32) -> Vec<Partition> {
    fn rec(cur: &mut Vec<u32>, max_len: usize, cap: u32, left: u32, out: &mut Vec<Partition>) {
        out.push(Partition::new(cur.clone()).expect("decreasing"));
        if cur.len() == max_len {
            return;
        }
        for p in 1..=cap.min(left) {
            cur.push(p);
            rec(cur, max_len, p, left - p, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), max_len, max_part, max_weight, &mut out);
    out
}

fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    crate::polylinalg::subsets_lex(n as usize, k)
        .into_iter()
        .map(|s| s.into_iter().map(|x| x as u32 + 1).collect())
        .collect()
}

/// Dimension of the space of symmetric polynomials in N variables with
/// d ≤ `bounds.1` and D ≤ `bounds.0` (defaults: the degree triple) that
/// satisfy the (m, ℓ)-wheel condition.
pub fn wheel_space_dimension(
    big_n: usize,
    m: usize,
    l: u32,
    bounds: Option<(u32, u32)>,
) -> Result<usize, SymError> {
    let order = l + m as u32;
    if order > MAX_ORDER {
        return Err(SymError::TooLarge(format!("cyclotomic order {order} exceeds {MAX_ORDER}")));
    }
    let (max_total, max_single) = match bounds {
        Some(b) => b,
        None => {
            let t = degree_triple(big_n, m, l)?;
            (t.total, t.single)
        }
    };
    let basis = bounded_partitions(big_n, max_single, max_total);
    if basis.len() > MAX_BASIS {
        return Err(SymError::TooLarge(format!("basis of {} elements exceeds {MAX_BASIS}", basis.len())));
    }
    if big_n < m + 1 {
        return Ok(basis.len());
    }
    let vars = Vars::indexed("z", big_n);
    let polys: Vec<Poly<_>> = basis.iter().map(|nu| monomial_symmetric(nu, &vars)).collect::<Result<_, _>>()?;
    let positions: Vec<usize> = (0..=m).collect();
    let mut echelon = Echelon::new(basis.len());
    for k_set in subsets(order, m + 1) {
        let subs: Vec<(usize, CycloNum)> =
            positions.iter().zip(&k_set).map(|(&p, &k)| (p, CycloNum::root_power(order, k as i64))).collect();
        let mut rows: HashMap<Monomial, Vec<CycloNum>> = HashMap::new();
        for (col, poly) in polys.iter().enumerate() {
            let (image, _) = substitute_scaled_w(poly, &subs);
            for (mono, c) in image.terms() {
                rows.entry(mono.clone()).or_insert_with(|| vec![CycloNum::zero(); basis.len()])[col] = c.clone();
            }
        }
        for row in rows.into_values() {
            echelon.insert(row);
            if echelon.rank() == basis.len() {
                return Ok(0);
            }
        }
    }
    Ok(basis.len() - echelon.rank())
}

/// Row echelon form maintained incrementally over a field.
struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<CycloNum>)>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new() }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut row: Vec<CycloNum>) {
        debug_assert_eq!(row.len(), self.width);
        for (pivot, basis_row) in &self.rows {
            let c = row[*pivot].clone();
            if c.is_zero() {
                continue;
            }
            for (x, b) in row.iter_mut().zip(basis_row) {
                if !b.is_zero() {
                    *x = x.sub_ref(&c.mul_ref(b));
                }
            }
        }
        if let Some(pivot) = row.iter().position(|x| !x.is_zero()) {
            let inv = row[pivot].inv().expect("non-zero element of a field");
            for x in row.iter_mut() {
                *x = x.mul_ref(&inv);
            }
            for (_, other) in self.rows.iter_mut() {
                let c = other[pivot].clone();
                if !c.is_zero() {
                    for (x, b) in other.iter_mut().zip(&row) {
                        *x = x.sub_ref(&c.mul_ref(b));
                    }
                }
            }
            self.rows.push((pivot, row));
        }
    }
}
