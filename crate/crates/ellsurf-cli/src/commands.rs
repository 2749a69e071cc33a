use exact_algebra::{BigRational, RatPoly};
use frobenius_counting::predict_count;
use irreducibility::{certify, IrreducibilityCertificate};
use num_traits::One;
use std::collections::BTreeSet;
use std::path::Path;
use surface_model::{bad_primes, invariants, parse_descriptor, shioda_tate_rho, BadPrimesReport,
    SurfaceInvariants, WeierstrassSurface};

use crate::registry::{registry_lookup, RegistryEntry, SURFACE_IDS};
use crate::source::SurfaceSource;
use crate::{CliError, Result};

/// A surface reference resolved from the command line: a registry id or a
/// descriptor file path.
pub struct ResolvedSurface {
    pub surface: WeierstrassSurface,
    pub entry: Option<RegistryEntry>,
}

pub fn resolve_surface(spec: &str) -> Result<ResolvedSurface> {
    if SURFACE_IDS.contains(&spec) {
        let entry = registry_lookup(spec)?;
        return Ok(ResolvedSurface {
            surface: entry.surface.clone(),
            entry: Some(entry),
        });
    }
    let path = Path::new(spec);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        let surface = parse_descriptor(&text)?.into_surface()?;
        return Ok(ResolvedSurface {
            surface,
            entry: None,
        });
    }
    Err(CliError::UnknownSurface(spec.to_string()))
}

/// The bad-prime set used for a run: the pinned set when the surface comes
/// from the registry, otherwise the computed refinement.
pub fn bad_set(resolved: &ResolvedSurface) -> Result<(BTreeSet<u64>, &'static str)> {
    match &resolved.entry {
        Some(e) => Ok((e.s.iter().copied().collect(), "pinned")),
        None => {
            let report = bad_primes(&resolved.surface)?;
            Ok((report.refined, "computed"))
        }
    }
}

pub struct CharpolyRow {
    pub p: u64,
    /// None for a bad prime.
    pub poly: Option<RatPoly>,
    /// Cubic-extension oracle result when requested: predicted and counted
    /// N over F_{p^3}.
    pub oracle: Option<(i64, i64)>,
}

pub struct CharpolyReport {
    pub surface: String,
    pub rows: Vec<CharpolyRow>,
}

/// Compute Q_p rows for the requested primes on a worker pool; primes in S
/// become bad rows. Rows come back in the requested order.
pub fn cmd_charpoly(
    surface: &WeierstrassSurface,
    s: &BTreeSet<u64>,
    primes: &[u64],
    oracle: bool,
    threads: usize,
) -> Result<CharpolyReport> {
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let rows: std::result::Result<Vec<CharpolyRow>, frobenius_counting::CountError> =
        pool.install(|| {
            primes
                .par_iter()
                .map(|&p| {
                    if s.contains(&p) {
                        return Ok(CharpolyRow {
                            p,
                            poly: None,
                            oracle: None,
                        });
                    }
                    let (data, chp) = frobenius_counting::charpoly_for(surface, p)?;
                    let oracle_cell = oracle
                        .then(|| (predict_count(&chp, data.det_sign, 3, data.c[2]), data.n[2]));
                    Ok(CharpolyRow {
                        p,
                        poly: Some(chp.q_poly),
                        oracle: oracle_cell,
                    })
                })
                .collect()
        });
    Ok(CharpolyReport {
        surface: surface.name.clone(),
        rows: rows?,
    })
}

pub struct CertifyOutput {
    pub certificate: IrreducibilityCertificate,
    pub charpolys: Vec<(u64, RatPoly)>,
}

/// Full certification pipeline: check the surface is a rank-5 system, then
/// run the three termination algorithms over lazily computed polynomials.
pub fn cmd_certify(resolved: &ResolvedSurface, bound: u64) -> Result<CertifyOutput> {
    let inv = invariants(&resolved.surface)?;
    if inv.ntriv_rank != 5 {
        return Err(CliError::NotRankFive {
            id: resolved.surface.name.clone(),
            rank: inv.ntriv_rank,
        });
    }
    let (s, origin) = bad_set(resolved)?;
    let mut source = SurfaceSource::new(resolved.surface.clone(), s.clone());
    let pinned = resolved.entry.as_ref().map(|e| &e.pinned);
    let certificate = certify(
        &resolved.surface.name,
        &mut source,
        &s,
        origin,
        bound,
        pinned,
    )?;
    let charpolys = source
        .cached()
        .map(|(p, q)| (p, q.clone()))
        .collect();
    Ok(CertifyOutput {
        certificate,
        charpolys,
    })
}

pub struct InvariantsReport {
    pub surface: String,
    pub inv: SurfaceInvariants,
    /// Picard number under the Shioda-Tate formula at Mordell-Weil rank 0.
    pub rho_at_rank0: i64,
}

pub fn cmd_invariants(resolved: &ResolvedSurface) -> Result<InvariantsReport> {
    let inv = invariants(&resolved.surface)?;
    let rho = shioda_tate_rho(&resolved.surface, 0)?;
    Ok(InvariantsReport {
        surface: resolved.surface.name.clone(),
        inv,
        rho_at_rank0: rho,
    })
}

pub fn cmd_badprimes(resolved: &ResolvedSurface) -> Result<BadPrimesReport> {
    Ok(bad_primes(&resolved.surface)?)
}

/// Verify a computed polynomial against an expected coefficient row.
pub fn matches_expected(poly: &RatPoly, expected: &[(i64, i64)]) -> bool {
    let want = RatPoly::from_ratios(expected);
    poly == &want && poly.leading_coeff().is_one()
}

/// Primes up to a bound, for --primes-up-to.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = exact_algebra::BigInt::from(1u64);
    loop {
        p = exact_algebra::next_prime(&p);
        let v = num_traits::ToPrimitive::to_u64(&p).expect("prime fits u64");
        if v > bound {
            return out;
        }
        out.push(v);
    }
}

/// Q_p(-1), used in reports.
pub fn eval_minus_one(poly: &RatPoly) -> BigRational {
    poly.eval(&-BigRational::one())
}
