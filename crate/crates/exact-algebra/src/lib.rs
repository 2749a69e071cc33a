//! Exact arithmetic foundations: arbitrary-precision integers and rationals,
//! dense univariate polynomials over Z and Q, small finite fields F_{p^k}
//! (k <= 3), and the number-theoretic primitives used by the surface /
//! counting / irreducibility layers.
//!
//! Everything here is immutable after construction and purely functional,
//! so values can be shared freely across threads.

mod cyclotomic;
mod fq;
mod intfactor;
mod intpoly;
mod kronecker;
mod polyfactor;
mod ratpoly;
mod resultant;
mod squarefree;

pub use cyclotomic::cyclotomic;
pub use fq::{fq_roots, FqContext, FqElem};
pub use intfactor::{factor_integer, is_prime, next_prime, PrimeFactorization};
pub use intpoly::IntPoly;
pub use kronecker::{kronecker, kronecker_i64};
pub use polyfactor::{factor_rational_poly, factor_squarefree_primitive};
pub use ratpoly::RatPoly;
pub use resultant::{int_gcd, poly_discriminant, poly_resultant, rat_gcd};
pub use squarefree::squarefree_decomposition;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use thiserror::Error;

/// Errors raised by the exact-algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for zero input")]
    ZeroInput,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unfactored cofactor {0} (exceeded factorization budget)")]
    UnfactoredCofactor(BigInt),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree {0} unsupported (need 1 <= k <= 3)")]
    BadExtensionDegree(usize),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
