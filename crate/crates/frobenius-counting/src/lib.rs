//! Point counting over small finite fields for elliptic surfaces with
//! multiplicative bad fibers, and assembly of the degree-5 Frobenius
//! characteristic polynomial on the non-trivial part of H^2 (Tate twisted).

mod charpoly;
mod counting;
mod traces;

pub use charpoly::{assemble_charpoly, charpoly_for, predict_count, verify_cubic_oracle, FrobeniusCharPoly};
pub use counting::{
    classify_fiber_mod_q, count_fiber_good, surface_count, surface_count_records, FiberClass,
    FiberCountRecord,
};
pub use traces::{compute_frobenius_data, ntriv_trace, FrobeniusData};

use exact_algebra::{AlgebraError, BigRational};
use surface_model::SurfaceError;

#[derive(Debug, thiserror::Error)]
pub enum CountError {
    #[error("additive fiber mod {p} at {place}: {p} must be treated as a bad prime")]
    AdditiveFiberAtGoodPrime { p: u64, place: String },
    #[error("fiber is singular; classify before counting")]
    SingularFiber,
    #[error("non-integral trace {t} over F_{q}")]
    NonIntegralTrace { t: BigRational, q: u64 },
    #[error("trace out of the purity range: {0}")]
    TraceOutOfRange(BigRational),
    #[error("characteristic polynomial root off the unit circle: |root| = {0}")]
    PurityViolation(f64),
    #[error("integrality violation: {0}")]
    IntegralityViolation(String),
    #[error("determinant sign not uniquely determined by the cubic-extension trace")]
    AmbiguousDeterminant,
    #[error("oracle mismatch over F_q, q = {q}: predicted {predicted}, counted {counted}")]
    OracleMismatch { q: u64, predicted: i64, counted: i64 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
}

pub type Result<T> = std::result::Result<T, CountError>;
