use num_integer::Integer;

use crate::exactnum::{BigRat, Coeff, CycloNum, Ring};
use crate::multipoly::{Monomial, Poly, Vars};

use super::schur::{chebyshev_u_at, schur_bialternant, schur_specialized};
use super::{two_staircase, Partition, StaircaseParams, SymError};

/// Context for a wheel-type substitution: the untouched variables of `vars`
/// (in order) followed by a fresh `w`.
pub(crate) struct WheelTarget {
    pub vars: Vars,
    /// Original position of each remaining variable.
    pub kept: Vec<usize>,
}

impl WheelTarget {
    pub fn new(source: &Vars, substituted: &[usize]) -> Self {
        let kept: Vec<usize> = (0..source.len()).filter(|i| !substituted.contains(i)).collect();
        let mut names: Vec<String> = kept.iter().map(|&i| source.name(i).to_string()).collect();
        names.push("w".into());
        WheelTarget { vars: Vars::new(names), kept }
    }

    pub fn w_index(&self) -> usize {
        self.kept.len()
    }

    pub fn w(&self) -> Poly<CycloNum> {
        Poly::var(&self.vars, self.w_index())
    }

    pub fn z(&self, position: usize) -> Poly<CycloNum> {
        let idx = self.kept.iter().position(|&k| k == position).expect("kept position");
        Poly::var(&self.vars, idx)
    }
}

/// Substitutes z_{pos} ↦ c·w for each `(pos, c)` (0-based positions).
pub(crate) fn substitute_scaled_w(
    poly: &Poly<BigRat>,
    subs: &[(usize, CycloNum)],
) -> (Poly<CycloNum>, WheelTarget) {
    let positions: Vec<usize> = subs.iter().map(|(p, _)| *p).collect();
    let target = WheelTarget::new(poly.vars(), &positions);
    let images: Vec<Poly<CycloNum>> = (0..poly.arity())
        .map(|i| match subs.iter().find(|(p, _)| *p == i) {
            Some((_, c)) => {
                let mut e = vec![0u32; target.vars.len()];
                e[target.w_index()] = 1;
                Poly::monomial(&target.vars, Monomial::new(e), c.clone())
            }
            None => target.z(i),
        })
        .collect();
    let out = poly.compose(&target.vars, &images).expect("arity checked");
    (out, target)
}

fn distinct(xs: &[u32]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

fn check_positions(positions: &[u32], len: usize) -> Result<(), SymError> {
    if !distinct(positions) || positions.iter().any(|&p| p == 0 || p as usize > len) {
        return Err(SymError::BadIndices(format!("positions {positions:?} must be distinct in 1..={len}")));
    }
    Ok(())
}

/// s_{λ_{n,ℓ,ℓ′}}(z∖{i,j,m}, q^g w, q^h w, q^k w) = 0 with q = ζ_{ℓ+2}.
/// Positions are 1-based; exponents distinct in 0..=ℓ+1.
pub fn wheel_check(p: StaircaseParams, positions: [u32; 3], exponents: [u32; 3]) -> Result<bool, SymError> {
    let lambda = two_staircase(p);
    check_positions(&positions, lambda.len())?;
    let order = p.l() + 2;
    if !distinct(&exponents) || exponents.iter().any(|&e| e > p.l() + 1) {
        return Err(SymError::BadIndices(format!("exponents {exponents:?} must be distinct in 0..={}", p.l() + 1)));
    }
    let s = schur_bialternant(&lambda);
    let subs: Vec<(usize, CycloNum)> = positions
        .iter()
        .zip(exponents)
        .map(|(&pos, e)| (pos as usize - 1, CycloNum::root_power(order, e as i64)))
        .collect();
    let (out, _) = substitute_scaled_w(&s, &subs);
    Ok(out.is_zero())
}

/// Both sides of the two-staircase recursion at z_i = w, z_j = q^k w.
pub fn recursion_sides(
    p: StaircaseParams,
    i: u32,
    j: u32,
    k: u32,
) -> Result<(Poly<CycloNum>, Poly<CycloNum>), SymError> {
    let lambda = two_staircase(p);
    check_positions(&[i, j], lambda.len())?;
    let l = p.l();
    if k == 0 || k > l + 1 {
        return Err(SymError::BadIndices(format!("k = {k} must lie in 1..={}", l + 1)));
    }
    let order = l + 2;
    let q = |e: u32| CycloNum::root_power(order, e as i64);
    let s = schur_bialternant(&lambda);
    let (lhs, target) =
        substitute_scaled_w(&s, &[(i as usize - 1, CycloNum::one()), (j as usize - 1, q(k))]);

    let w = target.w();
    let one = CycloNum::one();
    let mut rhs = w.pow(p.lp()).scale(&chebyshev_u_at(p.lp(), &one, &q(k)));
    // U_{ℓ+1}(z, w) / (z − q^k w) = ∏_{r ∈ 1..=ℓ+1, r ≠ k} (z − q^r w)
    for &pos in &target.kept {
        let z = target.z(pos);
        for r in (1..=l + 1).filter(|&r| r != k) {
            rhs = &rhs * &(&z - &w.scale(&q(r)));
        }
    }
    if p.n() > 1 {
        let smaller = two_staircase(StaircaseParams::new(p.n() - 1, l, p.lp())?);
        let s_small = schur_bialternant(&smaller).lift::<CycloNum>();
        let positions: Vec<usize> = (0..target.kept.len()).collect();
        rhs = &rhs * &s_small.embed(&target.vars, &positions);
    }
    Ok((lhs, rhs))
}

pub fn recursion_check(p: StaircaseParams, i: u32, j: u32, k: u32) -> Result<bool, SymError> {
    let (lhs, rhs) = recursion_sides(p, i, j, k)?;
    Ok(lhs == rhs)
}

/// When g = gcd(ℓ′+1, ℓ+2) > 1, substituting z_i = q^k z_j with k = (ℓ+2)/g
/// must annihilate s_{λ_{n,ℓ,ℓ′}}. Returns `None` when g = 1.
pub fn gcd_vanishing_check(p: StaircaseParams, i: u32, j: u32) -> Result<Option<bool>, SymError> {
    let lambda = two_staircase(p);
    check_positions(&[i, j], lambda.len())?;
    let g = (p.lp() + 1).gcd(&(p.l() + 2));
    if g == 1 {
        return Ok(None);
    }
    let order = p.l() + 2;
    let k = order / g;
    let s = schur_bialternant(&lambda).lift::<CycloNum>();
    let vars = s.vars().clone();
    let (i, j) = (i as usize - 1, j as usize - 1);
    let images: Vec<Poly<CycloNum>> = (0..vars.len())
        .map(|t| {
            if t == i {
                Poly::var(&vars, j).scale(&CycloNum::root_power(order, k as i64))
            } else {
                Poly::var(&vars, t)
            }
        })
        .collect();
    Ok(Some(s.compose(&vars, &images)?.is_zero()))
}

/// s_{λ_{2,ℓ,ℓ′}}(z, z, z, 0) against z^{2(ℓ+ℓ′)}(ℓ+2)(ℓ′+1)(ℓ−ℓ′+1)/2.
/// Returns `(computed, expected)`.
pub fn unfactorability_values(p: StaircaseParams) -> Result<(Poly<BigRat>, Poly<BigRat>), SymError> {
    if p.n() != 2 {
        return Err(SymError::BadParams(format!("unfactorability probe needs n = 2, got n = {}", p.n())));
    }
    let v = Vars::new(["z"]);
    let z = Poly::<BigRat>::var(&v, 0);
    let values = [z.clone(), z.clone(), z.clone(), Poly::zero(&v)];
    let computed = schur_specialized(&two_staircase(p), &values)?;
    let (l, lp) = (p.l() as i64, p.lp() as i64);
    let c = BigRat::new(((l + 2) * (lp + 1) * (l - lp + 1)).into(), 2.into());
    let expected = z.pow(2 * (p.l() + p.lp())).scale(&c);
    Ok((computed, expected))
}

pub fn unfactorability_probe(p: StaircaseParams) -> Result<bool, SymError> {
    let (a, b) = unfactorability_values(p)?;
    Ok(a == b)
}

/// With ν = (λ, μ): s_ν(z, εy) has no ε-power below |μ| and its ε^{|μ|}
/// coefficient is s_λ(z) s_μ(y).
pub fn splitting_check(lambda: &Partition, mu: &Partition) -> Result<bool, SymError> {
    let nu = lambda.concat(mu)?;
    let (k, h) = (lambda.len(), mu.len());
    if k == 0 || h == 0 {
        return Err(SymError::BadParams("both partitions must be non-empty".into()));
    }
    let target = Vars::indexed("z", k).concat(&Vars::indexed("y", h)).concat(&Vars::new(["eps"]));
    let eps_idx = k + h;
    let images: Vec<Poly<BigRat>> = (0..k + h)
        .map(|i| {
            let v = Poly::var(&target, i);
            if i < k {
                v
            } else {
                &v * &Poly::var(&target, eps_idx)
            }
        })
        .collect();
    let s_nu = schur_bialternant(&nu).compose(&target, &images)?;
    let by_eps = s_nu.collect_in(eps_idx);
    let weight = mu.weight();
    if by_eps.keys().any(|&e| e < weight) {
        return Ok(false);
    }
    let zy = target.without(&[eps_idx]);
    let s_l = schur_bialternant(lambda).embed(&zy, &(0..k).collect::<Vec<_>>());
    let s_m = schur_bialternant(mu).embed(&zy, &(k..k + h).collect::<Vec<_>>());
    let expected = &s_l * &s_m;
    let lowest = by_eps.get(&weight).cloned().unwrap_or_else(|| Poly::zero(&zy));
    Ok(lowest == expected)
}
