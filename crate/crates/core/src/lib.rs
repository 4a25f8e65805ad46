//! Exact commutative algebra over prime fields.

pub mod cli;
pub mod dsl;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod ideals;
pub mod koszul;
pub mod poly;
pub mod rees;
pub mod resolutions;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{AlgebraError, Result};
pub use groebner::{GroebnerBasis, Ideal, Length};
pub use poly::{Monomial, MonomialOrder, Polynomial, PolynomialRing, PrimeField};
