use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

use crate::algorithms::{algorithm_1, field_scan, AlgorithmOutcome};
use crate::fields::enumerate_quadratic_fields;
use crate::{CharPolySource, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Conclusion {
    /// All three algorithms terminated: the system is Lie irreducible for all
    /// but finitely many primes, with algebraic monodromy group SO(5).
    LieIrreducibleSo5,
    /// Some algorithm exhausted its bound. Never a claim of reducibility.
    InconclusiveUpToBound,
}

/// Externally pinned expected witnesses, verified (not trusted) by `certify`.
#[derive(Debug, Clone, Default)]
pub struct PinnedWitnesses {
    pub alg1: Option<u64>,
    pub real: BTreeMap<i64, u64>,
    pub imaginary: BTreeMap<i64, u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct IrreducibilityCertificate {
    pub surface: String,
    pub s: Vec<u64>,
    /// "pinned" when S came from the registry, "computed" otherwise.
    pub s_origin: String,
    pub alg1: AlgorithmOutcome,
    pub alg2: AlgorithmOutcome,
    pub alg3: AlgorithmOutcome,
    pub conclusion: Conclusion,
    /// Hypotheses carried as assertions, not recomputed.
    pub assumptions: Vec<String>,
}

/// Run all three termination algorithms over one characteristic-polynomial
/// source and assemble the certificate. The conclusion is LieIrreducibleSo5
/// exactly when all three algorithms terminate.
pub fn certify(
    surface: &str,
    source: &mut dyn CharPolySource,
    s: &BTreeSet<u64>,
    s_origin: &str,
    bound: u64,
    pinned: Option<&PinnedWitnesses>,
) -> Result<IrreducibilityCertificate> {
    let default_pins = PinnedWitnesses::default();
    let pins = pinned.unwrap_or(&default_pins);
    let alg1 = algorithm_1(source, s, bound, pins.alg1)?;
    let real = enumerate_quadratic_fields(s, true);
    let imaginary = enumerate_quadratic_fields(s, false);
    let alg2 = field_scan(2, &real, s, source, bound, &|m| {
        pins.real.get(&m).copied()
    })?;
    let alg3 = field_scan(3, &imaginary, s, source, bound, &|m| {
        pins.imaginary.get(&m).copied()
    })?;
    let conclusion = if alg1.terminated && alg2.terminated && alg3.terminated {
        Conclusion::LieIrreducibleSo5
    } else {
        Conclusion::InconclusiveUpToBound
    };
    Ok(IrreducibilityCertificate {
        surface: surface.to_string(),
        s: s.iter().copied().collect(),
        s_origin: s_origin.to_string(),
        alg1,
        alg2,
        alg3,
        conclusion,
        assumptions: vec![
            "compatible system pure of weight 0 and essentially self-dual".into(),
            "Hodge-Tate weights {-1, -1, 0, 1, 1}".into(),
            "complex conjugation trace is 1 or -1".into(),
        ],
    })
}
