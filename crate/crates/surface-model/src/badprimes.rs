use exact_algebra::{
    factor_integer, factor_rational_poly, poly_discriminant, poly_resultant, BigInt, IntPoly,
    RatPoly,
};
use num_traits::{Signed, ToPrimitive, Zero};
use std::collections::BTreeSet;

use crate::fibers::{classify_fibers, FiberKind};
use crate::modp::ModPolyP;
use crate::{Result, SurfaceError, WeierstrassSurface};

/// Candidate and refined sets of primes of bad reduction, with a human
/// readable audit trail. The refinement at p = 2 uses the same fiber-pattern
/// test as odd p but is flagged as heuristic.
#[derive(Debug, Clone)]
pub struct BadPrimesReport {
    pub candidates: BTreeSet<u64>,
    pub refined: BTreeSet<u64>,
    /// True when the status of p = 2 was decided by the (heuristic) pattern
    /// refinement rather than kept as a candidate.
    pub two_refined_heuristically: bool,
    pub notes: Vec<String>,
}

/// Compute candidate bad primes from integral invariants, then refine by
/// checking whether the mod-p fiber pattern (multiplicity multiset of the
/// discriminant including the place at infinity, with c4 nonvanishing on the
/// bad locus) reproduces the characteristic-zero pattern.
pub fn bad_primes(surface: &WeierstrassSurface) -> Result<BadPrimesReport> {
    // Refuse additive fibers in characteristic zero.
    let fibers = classify_fibers(surface)?;
    for f in &fibers {
        if matches!(f.kind, FiberKind::Additive) {
            return Err(SurfaceError::AdditiveFiber(f.place.to_string()));
        }
    }

    // Squarefree part of the discriminant.
    let (_, factors) = factor_rational_poly(&RatPoly::from(surface.delta.clone()))?;
    let mut delta_sf = IntPoly::one();
    for (pi, _) in &factors {
        delta_sf = delta_sf.mul(pi);
    }

    let mut candidates: BTreeSet<u64> = BTreeSet::from([2, 3]);
    let push_primes = |n: &BigInt, candidates: &mut BTreeSet<u64>| -> Result<()> {
        if n.is_zero() {
            return Ok(());
        }
        for p in factor_integer(n)?.primes() {
            match p.to_u64() {
                Some(u) => {
                    candidates.insert(u);
                }
                None => return Err(SurfaceError::PrimeTooLarge(p)),
            }
        }
        Ok(())
    };

    if delta_sf.deg() >= 1 {
        let disc = poly_discriminant(&RatPoly::from(delta_sf.clone()))?;
        push_primes(&(disc.numer() * disc.denom()).abs(), &mut candidates)?;
    }
    let res = poly_resultant(
        &RatPoly::from(surface.c4.clone()),
        &RatPoly::from(delta_sf.clone()),
    )?;
    push_primes(&(res.numer() * res.denom()).abs(), &mut candidates)?;
    push_primes(&surface.delta.leading_coeff(), &mut candidates)?;

    // Characteristic-zero geometric multiplicity partition of 12a.
    let mut char0: Vec<u32> = Vec::new();
    for (pi, n) in &factors {
        for _ in 0..pi.deg() {
            char0.push(*n);
        }
    }
    let n_inf = surface.ord_infinity_delta();
    if n_inf > 0 {
        char0.push(n_inf);
    }
    char0.sort_unstable();

    let mut refined = BTreeSet::new();
    let mut notes = Vec::new();
    for &p in &candidates {
        if good_reduction_pattern(surface, p, &char0) {
            notes.push(format!(
                "p = {p}: mod-p fiber pattern matches characteristic zero; removed{}",
                if p == 2 { " (heuristic at p = 2)" } else { "" }
            ));
        } else {
            notes.push(format!("p = {p}: pattern differs; kept"));
            refined.insert(p);
        }
    }

    Ok(BadPrimesReport {
        two_refined_heuristically: !refined.contains(&2),
        candidates,
        refined,
        notes,
    })
}

/// True when the reduction mod p has the same geometric bad-fiber pattern as
/// characteristic zero: identical multiplicity multiset (including infinity)
/// and c4 nonvanishing at every bad point.
fn good_reduction_pattern(surface: &WeierstrassSurface, p: u64, char0: &[u32]) -> bool {
    let delta_bar = ModPolyP::from_int_poly(&surface.delta, p);
    if delta_bar.is_zero() {
        return false;
    }
    let c4_bar = ModPolyP::from_int_poly(&surface.c4, p);
    if c4_bar.is_zero() {
        return false;
    }
    let mut modp: Vec<u32> = Vec::new();
    for (g, m) in delta_bar.squarefree_decomposition() {
        for _ in 0..g.deg() {
            modp.push(m);
        }
        // Any common root of delta and c4 mod p is an additive fiber.
        if !g.gcd(&c4_bar).is_one() {
            return false;
        }
    }
    let inf_mult = 12 * surface.weight - delta_bar.deg() as u32;
    if inf_mult > 0 {
        modp.push(inf_mult);
        let c4_inf = ModPolyP::from_int_poly(&surface.c4_at_infinity(), p);
        if c4_inf.eval(0) == 0 {
            return false;
        }
    }
    modp.sort_unstable();
    modp == char0
}
