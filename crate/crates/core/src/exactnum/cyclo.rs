use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;

use super::ring::{fmt_rat, BigRat, Coeff, Ring};

/// Dense integer polynomial, coefficients from low to high degree.
pub type DenseIntPoly = Vec<BigInt>;

/// Φ_m, the m-th cyclotomic polynomial, via exact division of x^m − 1 by
/// Φ_d for every proper divisor d of m.
pub fn cyclotomic_polynomial(m: u32) -> DenseIntPoly {
    assert!(m >= 1, "cyclotomic order must be positive");
    let mut num: DenseIntPoly = vec![BigInt::from(0); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::from(1);
    for d in 1..m {
        if m.is_multiple_of(d) {
            num = divide_monic(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

/// Quotient of `num` by the monic `den`; the remainder must vanish.
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> DenseIntPoly {
    let dd = den.len() - 1;
    debug_assert!(den[dd] == BigInt::from(1));
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::from(0); num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    debug_assert!(rem.iter().all(num_traits::Zero::is_zero));
    quot
}

pub fn euler_phi(m: u32) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Per-order data: φ(m) and the reductions of x^k mod Φ_m for 0 ≤ k < m.
/// Since Φ_m divides x^m − 1 every exponent can first be reduced mod m.
#[derive(Debug)]
struct CycloCtx {
    phi: usize,
    powers: Vec<Vec<BigInt>>,
}

impl CycloCtx {
    fn build(m: u32) -> Self {
        let modulus = cyclotomic_polynomial(m);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(m as usize);
        let mut cur = vec![BigInt::from(0); phi];
        cur[0] = BigInt::from(1);
        for _ in 0..m {
            powers.push(cur.clone());
            // multiply by x and fold the x^phi term back using the monic modulus
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigInt::from(0);
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &modulus[i];
                }
            }
        }
        CycloCtx { phi, powers }
    }
}

fn ctx(m: u32) -> Arc<CycloCtx> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(c) = cache.read().unwrap().get(&m) {
        return c.clone();
    }
    let built = Arc::new(CycloCtx::build(m));
    cache
        .write()
        .unwrap()
        .entry(m)
        .or_insert(built)
        .clone()
}

/// An element of the cyclotomic field Q(ζ_m), in power-basis coordinates
/// modulo Φ_m.
///
/// Values of different orders may be mixed freely: both operands are lifted
/// into Q(ζ_lcm) through ζ_m ↦ ζ_lcm^(lcm/m). Order 1 is the rational field.
#[derive(Clone, Debug)]
pub struct CycloNum {
    order: u32,
    coeffs: Vec<BigRat>,
}

impl CycloNum {
    pub fn rational(order: u32, r: BigRat) -> Self {
        let phi = ctx(order).phi;
        let mut coeffs = vec![BigRat::zero(); phi];
        coeffs[0] = r;
        CycloNum { order, coeffs }
    }

    /// Builds an element from power-basis coordinates of length φ(m).
    pub fn from_coeffs(order: u32, coeffs: Vec<BigRat>) -> Self {
        assert_eq!(coeffs.len(), ctx(order).phi, "coordinate vector must have length φ(m)");
        CycloNum { order, coeffs }
    }

    /// ζ_m^k for any integer k.
    pub fn root_power(m: u32, k: i64) -> Self {
        let c = ctx(m);
        let e = k.rem_euclid(m as i64) as usize;
        let coeffs = c.powers[e].iter().cloned().map(BigRat::from_integer).collect();
        CycloNum { order: m, coeffs }
    }

    /// The primitive root ζ_m = exp(2πi/m).
    pub fn zeta(m: u32) -> Self {
        Self::root_power(m, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// The same element seen in Q(ζ_target); `target` must be a multiple of the order.
    pub fn lift(&self, target: u32) -> Self {
        assert!(target.is_multiple_of(self.order), "cannot lift order {} to {}", self.order, target);
        if target == self.order {
            return self.clone();
        }
        let c = ctx(target);
        let step = (target / self.order) as usize;
        let mut out = vec![BigRat::zero(); c.phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = &c.powers[(i * step) % target as usize];
            for (o, r) in out.iter_mut().zip(row) {
                if !r.is_zero() {
                    *o += a * BigRat::from_integer(r.clone());
                }
            }
        }
        CycloNum { order: target, coeffs: out }
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        if self.order == other.order {
            return (self.clone(), other.clone());
        }
        let l = self.order.lcm(&other.order);
        (self.lift(l), other.lift(l))
    }

    /// `Some(r)` when the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRat> {
        self.coeffs[1..]
            .iter()
            .all(num_traits::Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(num_traits::Zero::is_zero)
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self.mul_ref(&r))
    }

    fn mul_same(&self, rhs: &Self) -> Self {
        let m = self.order as usize;
        let c = ctx(self.order);
        let mut acc = vec![BigRat::zero(); m];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % m] += a * b;
                }
            }
        }
        let mut out = vec![BigRat::zero(); c.phi];
        for (e, a) in acc.into_iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&c.powers[e]) {
                if !r.is_zero() {
                    *o += &a * BigRat::from_integer(r.clone());
                }
            }
        }
        CycloNum { order: self.order, coeffs: out }
    }

    /// Inverse through the extended Euclidean algorithm against Φ_m.
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let modulus: Vec<BigRat> = cyclotomic_polynomial(self.order)
            .into_iter()
            .map(BigRat::from_integer)
            .collect();
        let a = trim(self.coeffs.clone());
        // invariant: s_i * a ≡ r_i (mod Φ)
        let (mut r0, mut r1) = (modulus, a);
        let (mut s0, mut s1): (Vec<BigRat>, Vec<BigRat>) = (vec![], vec![BigRat::one()]);
        while !(r1.len() == 1 && !r1[0].is_zero()) {
            let (q, r) = dense_divrem(&r0, &r1);
            let s2 = dense_sub(&s0, &dense_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                // gcd is non-trivial; impossible for a non-zero element of a field
                return None;
            }
        }
        let scale = r1[0].recip();
        let mut coeffs = vec![BigRat::zero(); self.coeffs.len()];
        for (i, c) in s1.into_iter().enumerate() {
            coeffs[i] = c * &scale;
        }
        Some(CycloNum { order: self.order, coeffs })
    }
}

fn trim(mut v: Vec<BigRat>) -> Vec<BigRat> {
    while v.last().is_some_and(num_traits::Zero::is_zero) {
        v.pop();
    }
    v
}

fn dense_mul(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn dense_sub(a: &[BigRat], b: &[BigRat]) -> Vec<BigRat> {
    let mut out = vec![BigRat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn dense_divrem(num: &[BigRat], den: &[BigRat]) -> (Vec<BigRat>, Vec<BigRat>) {
    let mut rem = trim(num.to_vec());
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return (vec![], rem);
    }
    let lead = den[dd].recip();
    let mut quot = vec![BigRat::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead;
        if c.is_zero() {
            continue;
        }
        for (i, d) in den.iter().enumerate() {
            rem[k + i] -= &c * d;
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.aligned(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycloNum {}

impl From<BigRat> for CycloNum {
    fn from(r: BigRat) -> Self {
        CycloNum::rational(1, r)
    }
}

impl Ring for CycloNum {
    fn zero_like(&self) -> Self {
        CycloNum::rational(self.order, BigRat::zero())
    }
    fn one_like(&self) -> Self {
        CycloNum::rational(self.order, BigRat::one())
    }
    fn is_zero(&self) -> bool {
        CycloNum::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let (mut a, b) = self.aligned(rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.order == 1 {
            let r = &self.coeffs[0];
            return CycloNum { order: rhs.order, coeffs: rhs.coeffs.iter().map(|c| c * r).collect() };
        }
        if rhs.order == 1 {
            return rhs.mul_ref(self);
        }
        let (a, b) = self.aligned(rhs);
        a.mul_same(&b)
    }
    fn neg_ref(&self) -> Self {
        CycloNum { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        self.checked_div(rhs)
    }
}

impl Coeff for CycloNum {
    fn zero() -> Self {
        CycloNum::rational(1, BigRat::zero())
    }
    fn one() -> Self {
        CycloNum::rational(1, BigRat::one())
    }
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn display_parts(&self) -> (bool, String) {
        match self.to_rational() {
            Some(r) => r.display_parts(),
            None => (false, self.to_string()),
        }
    }
}

/// `[c0,c1,...]@m`
impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.coeffs.iter().map(fmt_rat).collect();
        write!(f, "[{}]@{}", body.join(","), self.order)
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for &$t {
            type Output = $t;
            fn add(self, rhs: Self) -> $t {
                self.add_ref(rhs)
            }
        }
        impl std::ops::Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: Self) -> $t {
                self.sub_ref(rhs)
            }
        }
        impl std::ops::Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: Self) -> $t {
                self.mul_ref(rhs)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                self.neg_ref()
            }
        }
    };
}


forward_ops!(CycloNum);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::ring::{rat, ratio};

    fn ints(v: &[i64]) -> DenseIntPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        for m in 1..=12 {
            assert_eq!(cyclotomic_polynomial(m).len() - 1, euler_phi(m));
        }
    }

    #[test]
    fn cube_roots() {
        let q = CycloNum::zeta(3);
        let q2 = CycloNum::root_power(3, 2);
        assert_eq!(&q + &q2, CycloNum::from(rat(-1)));
        let d = &q - &q2;
        assert_eq!(&d * &d, CycloNum::from(rat(-3)));
        let i = CycloNum::zeta(4);
        assert_eq!(&i * &i, CycloNum::from(rat(-1)));
    }

    #[test]
    fn root_power_reduction() {
        assert_eq!(CycloNum::root_power(3, 0), CycloNum::from(rat(1)));
        assert_eq!(CycloNum::root_power(3, 3), CycloNum::from(rat(1)));
        assert_eq!(CycloNum::root_power(3, -1), CycloNum::root_power(3, 2));
        let z = CycloNum::root_power(5, 4);
        assert_eq!(z.coeffs(), &[rat(-1), rat(-1), rat(-1), rat(-1)]);
    }

    #[test]
    fn mixed_orders_lift_to_lcm() {
        // ζ_4 · ζ_3 = ζ_12^(3+4)
        let p = &CycloNum::zeta(4) * &CycloNum::zeta(3);
        assert_eq!(p.order(), 12);
        assert_eq!(p, CycloNum::root_power(12, 7));
        assert_eq!(CycloNum::zeta(6).lift(12), CycloNum::root_power(12, 2));
        // -ζ_3^2 is a primitive sixth root
        assert_eq!(CycloNum::zeta(6), -&CycloNum::root_power(3, 2));
    }

    #[test]
    fn inverses() {
        let a = CycloNum::from_coeffs(5, vec![rat(2), ratio(-1, 3), rat(0), rat(7)]);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, CycloNum::one());
        assert!(CycloNum::zero().inv().is_none());
        assert!(CycloNum::rational(7, BigRat::zero()).inv().is_none());
    }

    #[test]
    fn display_form() {
        let a = CycloNum::from_coeffs(3, vec![ratio(1, 2), rat(-3)]);
        assert_eq!(a.to_string(), "[1/2,-3]@3");
    }
}
