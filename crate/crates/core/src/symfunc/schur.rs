use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::exactnum::{BigRat, Coeff, Ring};
use crate::multipoly::{Monomial, Poly, Vars};
use crate::polylinalg::{determinant, shifted_vandermonde, Matrix};

use super::{Partition, SymError};

/// U_h(x, y) = x^h + x^{h−1}y + … + y^h, in variables (x, y).
pub fn chebyshev_u(h: u32) -> Poly<BigRat> {
    let v = Vars::new(["x", "y"]);
    Poly::from_terms(&v, (0..=h).map(|a| (Monomial::new([h - a, a]), BigRat::one())))
}

/// U_h(a, b) for ring elements.
pub fn chebyshev_u_at<R: Ring>(h: u32, a: &R, b: &R) -> R {
    let mut acc = a.zero_like();
    for k in 0..=h {
        acc = acc.add_ref(&a.pow(h - k).mul_ref(&b.pow(k)));
    }
    acc
}

type Cache = RwLock<HashMap<Partition, Arc<Poly<BigRat>>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// s_λ(z_1, …, z_N) with N = length(λ), as the exact quotient of the shifted
/// Vandermonde by the Vandermonde. Results are cached process-wide.
pub fn schur_bialternant(lambda: &Partition) -> Arc<Poly<BigRat>> {
    if let Some(p) = cache().read().unwrap().get(lambda) {
        return p.clone();
    }
    let p = Arc::new(compute_bialternant(lambda));
    cache().write().unwrap().insert(lambda.clone(), p.clone());
    p
}

/// s_λ in a caller-supplied variable context of the right arity.
pub fn schur_bialternant_in(lambda: &Partition, vars: &Vars) -> Result<Poly<BigRat>, SymError> {
    if vars.len() != lambda.len() {
        return Err(SymError::LengthMismatch { expected: lambda.len(), got: vars.len() });
    }
    Ok(schur_bialternant(lambda).rename(vars))
}

fn compute_bialternant(lambda: &Partition) -> Poly<BigRat> {
    let n = lambda.len();
    let vars = Vars::indexed("z", n);
    if n == 0 {
        return Poly::one(&vars);
    }
    let numerator = leibniz_alternant(&vars, &lambda.shifted_exponents());
    let z: Vec<Poly<BigRat>> = (0..n).map(|i| Poly::var(&vars, i)).collect();
    let factors: Vec<Poly<BigRat>> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| &z[i] - &z[j]).collect();
    numerator.exact_divide_chain(&factors).expect("Vandermonde divides every alternant")
}

/// det(z_i^{e_j}) expanded term by term: one monomial per permutation.
fn leibniz_alternant(vars: &Vars, exps: &[u32]) -> Poly<BigRat> {
    let n = exps.len();
    let mut terms = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut sign = true;
    // Heap's algorithm; every step is one transposition
    let mut c = vec![0usize; n];
    let emit = |perm: &[usize], sign: bool, terms: &mut Vec<(Monomial, BigRat)>| {
        let mut e = vec![0u32; n];
        for (i, &j) in perm.iter().enumerate() {
            e[i] = exps[j];
        }
        let s = if sign { BigRat::one() } else { -BigRat::one() };
        terms.push((Monomial::new(e), s));
    };
    emit(&perm, sign, &mut terms);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = !sign;
            emit(&perm, sign, &mut terms);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Poly::from_terms(vars, terms)
}

/// h_0, …, h_kmax evaluated at `values`, via
/// H[r][k] = H[r−1][k] + x_r · H[r][k−1].
pub fn complete_homogeneous<R: Ring>(values: &[R], kmax: usize, unit: &R) -> Vec<R> {
    let mut h: Vec<R> = (0..=kmax).map(|k| if k == 0 { unit.one_like() } else { unit.zero_like() }).collect();
    for x in values {
        for k in 1..=kmax {
            let t = h[k].add_ref(&x.mul_ref(&h[k - 1]));
            h[k] = t;
        }
    }
    h
}

/// s_λ(values) through the Jacobi–Trudi determinant det(h_{λ_i − i + j}).
/// Unlike the bialternant this tolerates repeated arguments.
pub fn schur_specialized<R: Ring>(lambda: &Partition, values: &[R]) -> Result<R, SymError> {
    let n = lambda.len();
    if values.len() != n {
        return Err(SymError::LengthMismatch { expected: n, got: values.len() });
    }
    let Some(unit) = values.first() else {
        return Err(SymError::BadParams("Jacobi–Trudi needs at least one argument".into()));
    };
    let parts = lambda.parts();
    let kmax = (parts[0] as usize) + n;
    let h = complete_homogeneous(values, kmax, unit);
    let mat = Matrix::from_fn(n, n, |i, j| {
        let idx = parts[i] as i64 - i as i64 + j as i64;
        if idx < 0 {
            unit.zero_like()
        } else {
            h[idx as usize].clone()
        }
    });
    Ok(determinant(&mat)?)
}

/// Evaluates the bialternant numerator and denominator at distinct points of
/// a field and divides. Used as an independent path against Jacobi–Trudi.
pub fn schur_ratio_at<F: Coeff>(lambda: &Partition, points: &[F]) -> Result<F, SymError> {
    let num = determinant(&shifted_vandermonde(lambda, points)?)?;
    let den = determinant(&shifted_vandermonde(&Partition::zeros(points.len()), points)?)?;
    num.div_exact(&den).ok_or_else(|| SymError::BadParams("points must be distinct".into()))
}

/// m_ν(z_1, …, z_N): the sum of all distinct monomials with exponent
/// multiset ν (padded with zeros).
pub fn monomial_symmetric(nu: &Partition, vars: &Vars) -> Result<Poly<BigRat>, SymError> {
    let n = vars.len();
    if nu.len() > n {
        return Err(SymError::LengthMismatch { expected: n, got: nu.len() });
    }
    let mut exps: Vec<u32> = nu.parts().to_vec();
    exps.resize(n, 0);
    exps.sort_unstable();
    let mut terms = Vec::new();
    loop {
        terms.push((Monomial::new(exps.clone()), BigRat::one()));
        if !next_permutation(&mut exps) {
            break;
        }
    }
    Ok(Poly::from_terms(vars, terms))
}

fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

