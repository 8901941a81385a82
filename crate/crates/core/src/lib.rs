//! Exact computer algebra for staircase Schur functions, compound
//! determinants and alternating sign matrices.
//!
//! Everything is computed exactly: rationals and cyclotomic numbers for
//! coefficients, sparse polynomials for symbolic quantities, fraction-free
//! elimination for determinants.

pub mod asmlab;
pub mod exactnum;
pub mod harness;
pub mod multipoly;
pub mod par;
pub mod polylinalg;
pub mod symfunc;
pub mod theorems;

pub use exactnum::{BigRat, Coeff, CycloNum, Ring};
pub use multipoly::{Monomial, Poly, PolyError, Vars};
pub use par::Exec;
pub use symfunc::{Partition, StaircaseParams};
