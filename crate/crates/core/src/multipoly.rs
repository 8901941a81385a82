//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms live in a `BTreeMap` keyed by monomials under graded lexicographic
//! order (total degree first, then lexicographic on the exponent vector, the
//! first variable being the most significant). Variables are positional; their
//! names only matter for printing and name-based lookups.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;
use thiserror::Error;

use crate::exactnum::{Coeff, Ring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no exact quotient exists")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("k = {k} outside 1..={arity}")]
    BadK { k: usize, arity: usize },
}

/// Ordered list of variable names shared by polynomials of one context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vars(Arc<[String]>);

impl Vars {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Vars(names.into_iter().map(Into::into).collect())
    }

    /// `prefix1, ..., prefixN`
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Vars::new((1..=n).map(|i| format!("{prefix}{i}")))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn index_of(&self, name: &str) -> Result<usize, PolyError> {
        self.0
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    pub fn concat(&self, other: &Vars) -> Vars {
        Vars::new(self.0.iter().chain(other.0.iter()).cloned())
    }

    pub fn without(&self, drop: &[usize]) -> Vars {
        Vars::new(
            self.0
                .iter()
                .enumerate()
                .filter(|(i, _)| !drop.contains(i))
                .map(|(_, n)| n.clone()),
        )
    }
}

pub type Exponents = SmallVec<[u32; 8]>;

/// A monomial; the derived ordering is graded lexicographic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    degree: u32,
    exps: Exponents,
}

impl Monomial {
    pub fn new(exps: impl IntoIterator<Item = u32>) -> Self {
        let exps: Exponents = exps.into_iter().collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn one(arity: usize) -> Self {
        Monomial { degree: 0, exps: SmallVec::from_elem(0, arity) }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// `self / other` when every exponent of `other` is at most that of `self`.
    pub fn divide(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Exponents::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(*b)?);
        }
        Some(Monomial { degree: self.degree - other.degree, exps })
    }
}

/// Degree statistics of a polynomial: d_k is the largest total degree in any
/// k variables simultaneously, i.e. the max over monomials of the sum of the
/// k largest exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub d_k: u32,
    pub total_degree: u32,
    pub per_variable: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct Poly<F> {
    vars: Vars,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Coeff> Poly<F> {
    pub fn zero(vars: &Vars) -> Self {
        Poly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Vars, c: F) -> Self {
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Poly::constant(vars, F::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        Poly::var_pow(vars, i, 1)
    }

    pub fn var_pow(vars: &Vars, i: usize, e: u32) -> Self {
        let mut exps = Exponents::from_elem(0, vars.len());
        exps[i] = e;
        Poly::monomial(vars, Monomial::new(exps), F::one())
    }

    pub fn var_named(vars: &Vars, name: &str) -> Result<Self, PolyError> {
        Ok(Poly::var(vars, vars.index_of(name)?))
    }

    pub fn monomial(vars: &Vars, m: Monomial, c: F) -> Self {
        assert_eq!(m.arity(), vars.len(), "monomial arity must match the context");
        let mut p = Poly::zero(vars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from (exponents, coefficient) pairs; repeated
    /// monomials are summed.
    pub fn from_terms<I>(vars: &Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, F)>,
    {
        let mut p = Poly::zero(vars);
        for (m, c) in terms {
            assert_eq!(m.arity(), vars.len(), "monomial arity must match the context");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &F)> {
        self.terms.last_key_value()
    }

    pub fn coeff_of(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// The constant value when the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<F> {
        match self.terms.len() {
            0 => Some(F::zero()),
            1 => {
                let (m, c) = self.terms.first_key_value().unwrap();
                (m.degree == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, |m| m.degree)
    }

    pub fn min_total_degree(&self) -> u32 {
        self.terms.keys().next().map_or(0, |m| m.degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.total_degree() == self.min_total_degree()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exps[i]).max().unwrap_or(0)
    }

    /// Same terms, different variable names (arity must agree).
    pub fn rename(&self, vars: &Vars) -> Self {
        assert_eq!(vars.len(), self.arity(), "rename must keep the arity");
        Poly { vars: vars.clone(), terms: self.terms.clone() }
    }

    pub fn map_coeffs<G: Coeff>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        let mut out = Poly::zero(&self.vars);
        for (m, c) in &self.terms {
            let g = f(c);
            if !g.is_zero() {
                out.terms.insert(m.clone(), g);
            }
        }
        out
    }

    /// Coefficients embedded into a larger field (e.g. Q into Q(ζ_m)).
    pub fn lift<G: Coeff + From<F>>(&self) -> Poly<G> {
        self.map_coeffs(|c| G::from(c.clone()))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(&self.vars);
        }
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul_ref(c))).collect(),
        }
    }

    fn check_arity(&self, other: &Self) -> Result<(), PolyError> {
        if self.arity() == other.arity() {
            Ok(())
        } else {
            Err(PolyError::ArityMismatch { left: self.arity(), right: other.arity() })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, PolyError> {
        self.check_arity(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.vars));
        }
        if self.terms.len() == 1 || other.terms.len() == 1 {
            let (small, big) = if self.terms.len() == 1 { (self, other) } else { (other, self) };
            let (sm, sc) = small.terms.first_key_value().unwrap();
            return Ok(Poly {
                vars: self.vars.clone(),
                terms: big.terms.iter().map(|(m, c)| (m.mul(sm), c.mul_ref(sc))).collect(),
            });
        }
        let mut acc: HashMap<Monomial, F> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.mul_ref(cb);
                match acc.get_mut(&m) {
                    Some(v) => *v = v.add_ref(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Poly { vars: self.vars.clone(), terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
    }

    /// Exact quotient `self / den`, or `NotDivisible` when none exists.
    ///
    /// Repeatedly cancels the leading term of the remainder against the
    /// leading term of `den`; under a monomial order this succeeds exactly
    /// when `den` divides `self`.
    pub fn exact_divide(&self, den: &Self) -> Result<Self, PolyError> {
        self.check_arity(den)?;
        let (lm, lc) = den.leading_term().ok_or(PolyError::DivisionByZero)?;
        let lc_inv = lc.inv().ok_or(PolyError::DivisionByZero)?;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.last_key_value() {
            let qm = m.divide(lm).ok_or(PolyError::NotDivisible)?;
            let qc = c.mul_ref(&lc_inv);
            for (dm, dc) in &den.terms {
                let key = qm.mul(dm);
                let delta = qc.mul_ref(dc);
                match rem.get_mut(&key) {
                    Some(v) => {
                        let s = v.sub_ref(&delta);
                        if s.is_zero() {
                            rem.remove(&key);
                        } else {
                            *v = s;
                        }
                    }
                    None => {
                        rem.insert(key, delta.neg_ref());
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(Poly { vars: self.vars.clone(), terms: quot })
    }

    /// Divides successively by each factor; used for Vandermonde-type
    /// denominators given as a list of binomials.
    pub fn exact_divide_chain<'a>(&self, factors: impl IntoIterator<Item = &'a Self>) -> Result<Self, PolyError>
    where
        F: 'a,
    {
        let mut cur = self.clone();
        for f in factors {
            cur = cur.exact_divide(f)?;
        }
        Ok(cur)
    }

    pub fn eval(&self, point: &[F]) -> Result<F, PolyError> {
        if point.len() != self.arity() {
            return Err(PolyError::ArityMismatch { left: self.arity(), right: point.len() });
        }
        let mut powers: Vec<Vec<F>> = point.iter().map(|p| vec![F::one(), p.clone()]).collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_ref(&point[i]);
                    cache.push(next);
                }
                t = t.mul_ref(&cache[e as usize]);
            }
            acc = acc.add_ref(&t);
        }
        Ok(acc)
    }

    /// Replaces every variable `i` by `images[i]`, all of which live in the
    /// `target` context. Coefficients are embedded into `G`.
    pub fn compose<G>(&self, target: &Vars, images: &[Poly<G>]) -> Result<Poly<G>, PolyError>
    where
        G: Coeff + From<F>,
    {
        if images.len() != self.arity() {
            return Err(PolyError::ArityMismatch { left: self.arity(), right: images.len() });
        }
        if let Some(bad) = images.iter().find(|p| p.arity() != target.len()) {
            return Err(PolyError::ArityMismatch { left: target.len(), right: bad.arity() });
        }
        if images.iter().all(|p| p.terms.len() <= 1) {
            return Ok(self.compose_monomial(target, images));
        }
        let mut powers: Vec<Vec<Poly<G>>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out: Poly<G> = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, G::from(c.clone()));
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_ref(&images[i]);
                    cache.push(next);
                }
                t = t.mul_ref(&cache[e as usize]);
                if t.is_zero() {
                    break;
                }
            }
            for (tm, tc) in t.terms {
                out.add_term(tm, tc);
            }
        }
        Ok(out)
    }

    fn compose_monomial<G>(&self, target: &Vars, images: &[Poly<G>]) -> Poly<G>
    where
        G: Coeff + From<F>,
    {
        let parts: Vec<Option<(&Monomial, &G)>> = images.iter().map(|p| p.terms.first_key_value()).collect();
        let mut coeff_pows: Vec<Vec<G>> = parts
            .iter()
            .map(|p| vec![G::one(), p.map_or_else(G::zero, |(_, c)| c.clone())])
            .collect();
        let mut out: Poly<G> = Poly::zero(target);
        'terms: for (m, c) in &self.terms {
            let mut exps = Exponents::from_elem(0, target.len());
            let mut coeff = G::from(c.clone());
            for (i, &e) in m.exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let Some((im, _)) = parts[i] else { continue 'terms };
                for (x, y) in exps.iter_mut().zip(&im.exps) {
                    *x += y * e;
                }
                let cache = &mut coeff_pows[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_ref(&cache[1]);
                    cache.push(next);
                }
                coeff = coeff.mul_ref(&cache[e as usize]);
            }
            out.add_term(Monomial::new(exps), coeff);
        }
        out
    }

    /// Substitutes the named variables by polynomials of the same context;
    /// unassigned variables are kept.
    pub fn substitute(&self, assignment: &[(&str, Poly<F>)]) -> Result<Self, PolyError> {
        let mut images: Vec<Poly<F>> = (0..self.arity()).map(|i| Poly::var(&self.vars, i)).collect();
        for (name, value) in assignment {
            let i = self.vars.index_of(name)?;
            self.check_arity(value)?;
            images[i] = value.clone();
        }
        self.compose(&self.vars, &images)
    }

    /// Groups terms by the power of variable `v`; each coefficient is a
    /// polynomial in the remaining variables.
    pub fn collect_in(&self, v: usize) -> BTreeMap<u32, Poly<F>> {
        let rest = self.vars.without(&[v]);
        let mut out: BTreeMap<u32, Poly<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps[v];
            let exps: Exponents =
                m.exps.iter().enumerate().filter(|(i, _)| *i != v).map(|(_, &x)| x).collect();
            out.entry(e)
                .or_insert_with(|| Poly::zero(&rest))
                .terms
                .insert(Monomial::new(exps), c.clone());
        }
        out
    }

    /// Coefficient of `vx^i vy^j`, as a polynomial in the other variables.
    pub fn coefficient_bivariate(&self, vx: &str, vy: &str, i: u32, j: u32) -> Result<Self, PolyError> {
        let ix = self.vars.index_of(vx)?;
        let iy = self.vars.index_of(vy)?;
        let mut grid = self.coefficient_grid(ix, iy, i as usize + 1, j as usize + 1);
        Ok(grid.swap_remove(i as usize).swap_remove(j as usize))
    }

    /// All coefficients of `x^i y^j` for `i < rows`, `j < cols` in one pass,
    /// where x and y are the variables at positions `ix` and `iy`.
    pub fn coefficient_grid(&self, ix: usize, iy: usize, rows: usize, cols: usize) -> Vec<Vec<Self>> {
        assert_ne!(ix, iy);
        let rest = self.vars.without(&[ix, iy]);
        let mut grid: Vec<Vec<Self>> = (0..rows).map(|_| (0..cols).map(|_| Poly::zero(&rest)).collect()).collect();
        for (m, c) in &self.terms {
            let (ei, ej) = (m.exps[ix] as usize, m.exps[iy] as usize);
            if ei >= rows || ej >= cols {
                continue;
            }
            let exps: Exponents = m
                .exps
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != ix && *k != iy)
                .map(|(_, &x)| x)
                .collect();
            grid[ei][ej].terms.insert(Monomial::new(exps), c.clone());
        }
        grid
    }

    /// Drops variables that do not occur; `None` if any of them does.
    pub fn restrict(&self, drop: &[usize]) -> Option<Self> {
        let rest = self.vars.without(drop);
        let mut out = Poly::zero(&rest);
        for (m, c) in &self.terms {
            if drop.iter().any(|&d| m.exps[d] != 0) {
                return None;
            }
            let exps: Exponents =
                m.exps.iter().enumerate().filter(|(i, _)| !drop.contains(i)).map(|(_, &x)| x).collect();
            out.terms.insert(Monomial::new(exps), c.clone());
        }
        Some(out)
    }

    /// Embeds into a larger context: variable `i` becomes `positions[i]`.
    pub fn embed(&self, target: &Vars, positions: &[usize]) -> Self {
        assert_eq!(positions.len(), self.arity());
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut exps = Exponents::from_elem(0, target.len());
            for (i, &e) in m.exps.iter().enumerate() {
                exps[positions[i]] += e;
            }
            out.add_term(Monomial::new(exps), c.clone());
        }
        out
    }

    pub fn degree_stats(&self, k: usize) -> Result<DegreeStats, PolyError> {
        if k == 0 || k > self.arity() {
            return Err(PolyError::BadK { k, arity: self.arity() });
        }
        let mut d_k = 0;
        let mut sorted: Vec<u32> = Vec::with_capacity(self.arity());
        for m in self.terms.keys() {
            sorted.clear();
            sorted.extend_from_slice(&m.exps);
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            d_k = d_k.max(sorted[..k].iter().sum());
        }
        Ok(DegreeStats {
            d_k,
            total_degree: self.total_degree(),
            per_variable: (0..self.arity()).map(|i| self.degree_in(i)).collect(),
        })
    }

    /// Invariance under every adjacent transposition of the given positions.
    pub fn is_symmetric_in(&self, positions: &[usize]) -> bool {
        positions.windows(2).all(|w| {
            let swapped: BTreeMap<Monomial, F> = self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.exps.clone();
                    exps.swap(w[0], w[1]);
                    (Monomial { degree: m.degree, exps }, c.clone())
                })
                .collect();
            swapped == self.terms
        })
    }

    pub fn is_symmetric_in_names(&self, names: &[&str]) -> Result<bool, PolyError> {
        let pos = names.iter().map(|n| self.vars.index_of(n)).collect::<Result<Vec<_>, _>>()?;
        Ok(self.is_symmetric_in(&pos))
    }

    pub fn is_symmetric(&self) -> bool {
        let all: Vec<usize> = (0..self.arity()).collect();
        self.is_symmetric_in(&all)
    }
}

impl<F: Coeff> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.arity() == other.arity() && self.terms == other.terms
    }
}

impl<F: Coeff> Ring for Poly<F> {
    fn zero_like(&self) -> Self {
        Poly::zero(&self.vars)
    }
    fn one_like(&self) -> Self {
        Poly::one(&self.vars)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
    fn neg_ref(&self) -> Self {
        Poly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg_ref())).collect(),
        }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.exact_divide(rhs).ok()
    }
}

impl<F: Coeff> std::ops::Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        self.add_ref(rhs)
    }
}

impl<F: Coeff> std::ops::Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        self.sub_ref(rhs)
    }
}

impl<F: Coeff> std::ops::Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        self.mul_ref(rhs)
    }
}

impl<F: Coeff> std::ops::Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.neg_ref()
    }
}

/// Canonical text form, descending graded-lex: `3*z1^2*z2 - 1/2*z2^3`.
impl<F: Coeff> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let (neg, body) = c.display_parts();
            let sep = match (idx, neg) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let mono: Vec<String> = m
                .exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.vars.name(i).to_string() } else { format!("{}^{}", self.vars.name(i), e) })
                .collect();
            write!(f, "{sep}")?;
            if mono.is_empty() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", body, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, ratio, BigRat, CycloNum};

    type P = Poly<BigRat>;

    fn xy() -> (Vars, P, P) {
        let v = Vars::new(["x", "y"]);
        let x = P::var(&v, 0);
        let y = P::var(&v, 1);
        (v, x, y)
    }

    #[test]
    fn ring_arithmetic() {
        let (_, x, y) = xy();
        assert_eq!((&(&x + &y) * &(&x - &y)).to_string(), "x^2 - y^2");
        assert!((&(&x + &y) + &(&(-&x) - &y)).is_zero());
        let u1 = &x + &y;
        assert_eq!((&u1 * &u1).to_string(), "x^2 + 2*x*y + y^2");
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let z = P::var(&Vars::indexed("z", 3), 0);
        assert_eq!(x.checked_add(&z), Err(PolyError::ArityMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn printing() {
        let v = Vars::indexed("z", 2);
        let p = P::from_terms(
            &v,
            [(Monomial::new([2, 1]), rat(3)), (Monomial::new([0, 3]), ratio(-1, 2))],
        );
        assert_eq!(p.to_string(), "3*z1^2*z2 - 1/2*z2^3");
        let c = P::constant(&v, rat(-4));
        assert_eq!(c.to_string(), "-4");
        assert_eq!(P::zero(&v).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        let (_, x, y) = xy();
        let num = &(&x * &x) - &(&y * &y);
        assert_eq!(num.exact_divide(&(&x - &y)).unwrap(), &x + &y);
        let bad = &(&x * &x) + &(&y * &y);
        assert_eq!(bad.exact_divide(&(&x - &y)), Err(PolyError::NotDivisible));
        assert_eq!(bad.exact_divide(&P::zero(x.vars())), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn substitution() {
        let (v, x, y) = xy();
        let p = &(&(&x * &x) + &(&x * &y)) + &(&y * &y);
        // x -> w, y -> q w over Q(ζ3) collapses to w^2 (1 + q + q^2) = 0
        let target = Vars::new(["w"]);
        let w: Poly<CycloNum> = Poly::var(&target, 0);
        let qw = w.scale(&CycloNum::zeta(3));
        assert!(p.compose(&target, &[w, qw]).unwrap().is_zero());

        let z = Vars::indexed("z", 2);
        let s = &P::var(&z, 0) + &P::var(&z, 1);
        assert_eq!(s.substitute(&[("z2", P::zero(&z))]).unwrap(), P::var(&z, 0));
        assert_eq!(
            s.substitute(&[("t", P::zero(&z))]),
            Err(PolyError::UnknownVariable("t".into()))
        );
        let _ = v;
    }

    #[test]
    fn bivariate_coefficients() {
        let (_, x, y) = xy();
        let p = &x + &y;
        assert_eq!(p.coefficient_bivariate("x", "y", 1, 0).unwrap().as_constant(), Some(rat(1)));
        assert!(p.coefficient_bivariate("x", "y", 1, 1).unwrap().is_zero());
        assert!(p.coefficient_bivariate("x", "t", 0, 0).is_err());
    }

    #[test]
    fn degree_statistics() {
        let (_, x, y) = xy();
        let p = &(&x * &x) * &y;
        let st = p.degree_stats(1).unwrap();
        assert_eq!(st.d_k, 2);
        assert_eq!(st.total_degree, 3);
        assert_eq!(st.per_variable, vec![2, 1]);
        assert_eq!(p.degree_stats(3), Err(PolyError::BadK { k: 3, arity: 2 }));
        assert_eq!(p.degree_stats(0), Err(PolyError::BadK { k: 0, arity: 2 }));
    }

    #[test]
    fn symmetry() {
        let z = Vars::indexed("z", 2);
        let (a, b) = (P::var(&z, 0), P::var(&z, 1));
        assert!((&a + &b).is_symmetric());
        assert!(!(&a - &b).is_symmetric());
        assert!((&a - &b).is_symmetric_in_names(&["z1"]).unwrap());
    }

    #[test]
    fn evaluation() {
        let (_, x, y) = xy();
        let p = &(&x * &x) - &(&y * &(&x * &y));
        assert_eq!(p.eval(&[rat(2), rat(3)]).unwrap(), rat(4 - 18));
    }
}
