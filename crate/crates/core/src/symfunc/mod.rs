//! Partitions, Schur polynomials and the staircase identities: wheel
//! conditions, recursions, splitting and minimal-degree uniqueness.
//!
//! The m-staircase partition follows the rule λ_{N−i} = aℓ + λ′_{m−b}
//! (i = am + b, 0 ≤ b < m) with λ′_1 − λ′_m ≤ ℓ. This is the reading under
//! which m = 1 gives the ordinary staircase, m = 2 gives the two-staircase
//! λ_{n,ℓ,ℓ′}, and the shifted parts are (ℓ+m)a + b + λ′_{m−b}.

mod mstair;
mod partition;
mod schur;
mod wheel;

use thiserror::Error;

use crate::multipoly::PolyError;
use crate::polylinalg::LinalgError;

pub use mstair::{
    degree_triple, degree_triple_of_polynomial, m_recursion_check, m_recursion_sides, m_wheel_check,
    wheel_space_dimension, DegreeTriple, WheelOutcome,
};
pub use partition::{m_staircase, staircase, two_staircase, Partition, StaircaseParams};
pub use schur::{
    chebyshev_u, chebyshev_u_at, complete_homogeneous, monomial_symmetric, schur_bialternant, schur_bialternant_in,
    schur_ratio_at, schur_specialized,
};
pub use wheel::{
    gcd_vanishing_check, recursion_check, recursion_sides, splitting_check, unfactorability_probe,
    unfactorability_values, wheel_check,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymError {
    #[error("not a partition: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("cannot parse partition part {0:?}")]
    Parse(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("bad indices: {0}")]
    BadIndices(String),
    #[error("cannot append a partition starting at {first} after one ending at {last}")]
    BadConcat { last: u32, first: u32 },
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
