use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always stored in lowest terms with a positive denominator.
pub type BigRat = BigRational;

/// A commutative ring with exact (partial) division.
///
/// Elements carry their own context (a polynomial knows its arity), so the
/// additive and multiplicative units are built from an existing element.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    /// `Some(q)` with `q * rhs == self`, or `None` when no exact quotient exists.
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_ref(&base);
            }
        }
        acc
    }
}

/// A coefficient field for polynomials: context-free units, inverses and a
/// rational embedding.
pub trait Coeff: Ring + From<BigRat> + fmt::Display + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn inv(&self) -> Option<Self>;

    fn from_i64(v: i64) -> Self {
        Self::from(BigRat::from_integer(BigInt::from(v)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Splits the coefficient into a sign and an unsigned textual form used
    /// when printing polynomials. Coefficients without a natural sign report
    /// `false` and are printed whole.
    fn display_parts(&self) -> (bool, String) {
        (false, self.to_string())
    }
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn one_like(&self) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        Zero::is_zero(&r).then_some(q)
    }
}

impl Ring for BigRat {
    fn zero_like(&self) -> Self {
        Zero::zero()
    }
    fn one_like(&self) -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        (!Zero::is_zero(rhs)).then(|| self / rhs)
    }
}

impl Coeff for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn display_parts(&self) -> (bool, String) {
        (self.is_negative(), fmt_rat(&self.abs()))
    }
}

/// `p/q`, with the denominator omitted when it is 1.
pub fn fmt_rat(r: &BigRat) -> String {
    if One::is_one(r.denom()) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Binomial coefficient with the convention C(n, k) = 0 for k < 0 or k > n.
pub fn binomial_signed(n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        binomial(n as u64, k as u64)
    }
}
