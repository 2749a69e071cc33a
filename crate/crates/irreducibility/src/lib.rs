//! Termination algorithms certifying Lie irreducibility (SO(5) monodromy) of
//! the 5-dimensional compatible system attached to an elliptic surface, from
//! its Frobenius characteristic polynomials: a root-of-unity test on
//! eigenvalue pair products, and inert-prime scans over the quadratic fields
//! unramified outside the bad set.

mod algorithms;
mod certificate;
mod fields;

pub use algorithms::{
    algorithm_1, charpoly_decompose, field_scan, has_root_of_unity_root, inert_scan,
    pair_product_quartic, AlgorithmOutcome, FieldWitness, DEFAULT_SCAN_BOUND,
};
pub use certificate::{certify, Conclusion, IrreducibilityCertificate, PinnedWitnesses};
pub use fields::{enumerate_quadratic_fields, QuadraticField};

use exact_algebra::{AlgebraError, RatPoly};
use std::collections::BTreeMap;

#[derive(Debug, thiserror::Error)]
pub enum IrrError {
    #[error("invalid characteristic polynomial: {0}")]
    InputError(String),
    #[error("no characteristic polynomial available for p = {0}")]
    MissingCharPoly(u64),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Source(String),
}

pub type Result<T> = std::result::Result<T, IrrError>;

/// Supplier of Frobenius characteristic polynomials by prime. `Ok(None)`
/// means the prime is bad (skipped by the scans); `MissingCharPoly` means the
/// source cannot provide a polynomial the scan needs.
pub trait CharPolySource {
    fn charpoly(&mut self, p: u64) -> Result<Option<RatPoly>>;
}

/// A fixed table of polynomials: entries with `None` are bad primes, absent
/// primes are missing.
impl CharPolySource for BTreeMap<u64, Option<RatPoly>> {
    fn charpoly(&mut self, p: u64) -> Result<Option<RatPoly>> {
        match self.get(&p) {
            Some(q) => Ok(q.clone()),
            None => Err(IrrError::MissingCharPoly(p)),
        }
    }
}
