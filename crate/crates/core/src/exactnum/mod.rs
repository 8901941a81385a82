//! Coefficient domains: arbitrary-precision integers and rationals (from
//! `num`), and cyclotomic fields Q(ζ_m) in power-basis form.

mod cyclo;
mod ring;

pub use cyclo::{cyclotomic_polynomial, euler_phi, CycloNum, DenseIntPoly};
pub use ring::{binomial, binomial_signed, fmt_rat, rat, ratio, BigRat, Coeff, Ring};

pub use num_bigint::{BigInt, BigUint};
