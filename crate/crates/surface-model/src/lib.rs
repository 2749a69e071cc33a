//! Elliptic surfaces fibered over the projective line: integral Weierstrass
//! models, fiber classification, branched-cover pullbacks, and detection of
//! primes of bad reduction.

mod badprimes;
mod cover;
mod descriptor;
mod fibers;
mod modp;
mod poly_parse;
mod surface;

pub use badprimes::{bad_primes, BadPrimesReport};
pub use cover::{cover_dimension, pullback, ramification_profile, RamTarget, RationalMap};
pub use descriptor::{parse_descriptor, SurfaceDescriptor};
pub use fibers::{classify_fibers, invariants, shioda_tate_rho, FiberDatum, FiberKind, PlaceOfP1, SurfaceInvariants};
pub use modp::ModPolyP;
pub use poly_parse::parse_poly;
pub use surface::WeierstrassSurface;

use exact_algebra::AlgebraError;
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum SurfaceError {
    #[error("degenerate model: discriminant is identically zero")]
    Nondegenerate,
    #[error("Euler number mismatch: 12a = {expected} but fiber sum is {got} (non-minimal model?)")]
    EulerMismatch { expected: i64, got: i64 },
    #[error("base surface has an additive fiber at {0}; pullback requires multiplicative fibers only")]
    AdditiveBaseFiber(String),
    #[error("surface has an additive fiber at {0}")]
    AdditiveFiber(String),
    #[error("rational map has a common factor between numerator and denominator")]
    NotCoprime,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("integer too large for a refinement prime: {0}")]
    PrimeTooLarge(BigInt),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub type Result<T> = std::result::Result<T, SurfaceError>;
