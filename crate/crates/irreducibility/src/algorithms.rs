use exact_algebra::{cyclotomic, next_prime, rat_gcd, BigInt, BigRational, RatPoly};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

use crate::fields::QuadraticField;
use crate::{CharPolySource, IrrError, Result};

/// Default upper bound for prime scans when none is configured.
pub const DEFAULT_SCAN_BOUND: u64 = 1000;

/// Outcome of one termination algorithm. Algorithm 1 reports a single witness
/// prime; algorithms 2 and 3 report one witness per quadratic field.
#[derive(Debug, Clone, Serialize)]
pub struct AlgorithmOutcome {
    pub algorithm: u8,
    pub terminated: bool,
    /// Algorithm 1 only: the reported break prime.
    pub witness: Option<u64>,
    /// Algorithm 1 only: the least break prime found by the scan.
    pub least: Option<u64>,
    /// Algorithms 2/3 only: per-field witnesses.
    pub fields: Vec<FieldWitness>,
    /// Largest prime examined.
    pub scan_bound: u64,
}

/// Witness bookkeeping for one quadratic field: the externally pinned witness
/// (if any) with its verification status, the witness actually reported, and
/// the least witness found by a fresh scan.
#[derive(Debug, Clone, Serialize)]
pub struct FieldWitness {
    pub m: i64,
    pub pinned: Option<u64>,
    pub pinned_valid: Option<bool>,
    pub witness: Option<u64>,
    pub least: Option<u64>,
}

/// Split a degree-5 Frobenius polynomial Q(X) = (X - 1)(X^4 - s1 X^3 +
/// (e+2) X^2 - s1 X + 1) into (s1, e). Errors if X = 1 is not a root or the
/// quartic cofactor is not palindromic.
pub fn charpoly_decompose(q: &RatPoly) -> Result<(BigRational, BigRational)> {
    if q.deg() != 5 || !q.leading_coeff().is_one() {
        return Err(IrrError::InputError(
            "expected a monic degree-5 polynomial".into(),
        ));
    }
    if !q.eval(&BigRational::one()).is_zero() {
        return Err(IrrError::InputError("X = 1 is not a root".into()));
    }
    let (quartic, rem) = q.div_rem(&RatPoly::from_i64(&[-1, 1]));
    debug_assert!(rem.is_zero());
    let c0 = quartic.coeff(0);
    let c1 = quartic.coeff(1);
    let c3 = quartic.coeff(3);
    if !c0.is_one() || c1 != c3 {
        return Err(IrrError::InputError(
            "quartic cofactor is not palindromic".into(),
        ));
    }
    let s1 = -c3;
    let e = quartic.coeff(2) - BigRational::from(BigInt::from(2));
    Ok((s1, e))
}

/// The quartic W(X) = X^4 - e X^3 + (s1^2 - 2e - 2) X^2 - e X + 1 whose roots
/// are the pair products {ab, 1/(ab), a/b, b/a} of the eigenvalue pairs.
pub fn pair_product_quartic(s1: &BigRational, e: &BigRational) -> RatPoly {
    let two = BigRational::from(BigInt::from(2));
    let mid = s1 * s1 - &two * e - two;
    RatPoly::new(vec![
        BigRational::one(),
        -e.clone(),
        mid,
        -e.clone(),
        BigRational::one(),
    ])
}

/// Orders n with phi(n) <= 4: the only possible orders of a root of unity of
/// degree at most 4 over Q.
const UNITY_ORDERS: [u32; 9] = [1, 2, 3, 4, 5, 6, 8, 10, 12];

/// True iff W shares a root with some cyclotomic polynomial Phi_n, phi(n) <= 4.
pub fn has_root_of_unity_root(w: &RatPoly) -> bool {
    for n in UNITY_ORDERS {
        let phi = cyclotomic(n).expect("n >= 1");
        let phi = RatPoly::new(
            phi.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        );
        if rat_gcd(w, &phi).deg() > 0 {
            return true;
        }
    }
    false
}

fn primes_up_to(bound: u64) -> impl Iterator<Item = u64> {
    let mut p = BigInt::from(1u64);
    std::iter::from_fn(move || {
        p = next_prime(&p);
        let v = p.to_u64().expect("prime fits u64");
        (v <= bound).then_some(v)
    })
}

/// Whether Algorithm 1 breaks at p: neither eigenvalue pair product is a root
/// of unity.
fn alg1_breaks(q: &RatPoly) -> Result<bool> {
    let (s1, e) = charpoly_decompose(q)?;
    Ok(!has_root_of_unity_root(&pair_product_quartic(&s1, &e)))
}

/// Algorithm 1: scan good primes in increasing order for one where neither
/// eigenvalue pair product is a root of unity. A pinned witness, when given
/// and valid, is the one reported; the least witness found is recorded too.
pub fn algorithm_1(
    source: &mut dyn CharPolySource,
    s: &BTreeSet<u64>,
    bound: u64,
    pinned: Option<u64>,
) -> Result<AlgorithmOutcome> {
    let mut least = None;
    for p in primes_up_to(bound) {
        if s.contains(&p) {
            continue;
        }
        let Some(q) = source.charpoly(p)? else {
            continue;
        };
        if alg1_breaks(&q)? {
            least = Some(p);
            break;
        }
    }
    let pinned_ok = match pinned {
        Some(p) if !s.contains(&p) && p <= bound => match source.charpoly(p)? {
            Some(q) => alg1_breaks(&q)?,
            None => false,
        },
        _ => false,
    };
    let witness = if pinned_ok { pinned } else { least };
    Ok(AlgorithmOutcome {
        algorithm: 1,
        terminated: witness.is_some(),
        witness,
        least,
        fields: Vec::new(),
        scan_bound: bound,
    })
}

/// Inner loop of Algorithms 2/3: the least prime p not in S, inert in the
/// field, with Q_p(-1) != 0 — or None if every such prime up to the bound has
/// Q_p(-1) = 0.
pub fn inert_scan(
    field: &QuadraticField,
    s: &BTreeSet<u64>,
    source: &mut dyn CharPolySource,
    bound: u64,
) -> Result<Option<u64>> {
    for p in primes_up_to(bound) {
        if s.contains(&p) || !field.is_inert(p) {
            continue;
        }
        let Some(q) = source.charpoly(p)? else {
            continue;
        };
        if !q.eval(&-BigRational::one()).is_zero() {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Run the inert-prime scan for every field in a Sigma list (algorithm 2 for
/// real fields, 3 for imaginary), verifying pinned witnesses when provided.
pub fn field_scan(
    algorithm: u8,
    fields: &[QuadraticField],
    s: &BTreeSet<u64>,
    source: &mut dyn CharPolySource,
    bound: u64,
    pinned: &dyn Fn(i64) -> Option<u64>,
) -> Result<AlgorithmOutcome> {
    let mut out = Vec::new();
    for f in fields {
        let least = inert_scan(f, s, source, bound)?;
        let pin = pinned(f.m);
        let pinned_valid = match pin {
            Some(p) => Some(
                !s.contains(&p)
                    && p <= bound
                    && f.is_inert(p)
                    && matches!(source.charpoly(p)?,
                        Some(q) if !q.eval(&-BigRational::one()).is_zero()),
            ),
            None => None,
        };
        let witness = if pinned_valid == Some(true) { pin } else { least };
        out.push(FieldWitness {
            m: f.m,
            pinned: pin,
            pinned_valid,
            witness,
            least,
        });
    }
    Ok(AlgorithmOutcome {
        algorithm,
        terminated: out.iter().all(|w| w.witness.is_some()),
        witness: None,
        least: None,
        fields: out,
        scan_bound: bound,
    })
}
