use exact_algebra::{factor_rational_poly, int_gcd, BigRational, IntPoly, RatPoly};
use num_traits::Zero;

use crate::fibers::{classify_fibers, FiberKind};
use crate::{Result, SurfaceError, WeierstrassSurface};

/// A non-constant morphism of the projective line, s -> P(s)/Q(s) with
/// coprime integer polynomials.
#[derive(Debug, Clone)]
pub struct RationalMap {
    pub numerator: IntPoly,
    pub denominator: IntPoly,
    pub degree: usize,
}

impl RationalMap {
    pub fn new(numerator: IntPoly, denominator: IntPoly) -> Result<Self> {
        if numerator.is_zero() || denominator.is_zero() {
            return Err(SurfaceError::NotCoprime);
        }
        if int_gcd(&numerator, &denominator).deg() != 0 {
            return Err(SurfaceError::NotCoprime);
        }
        let degree = numerator.deg().max(denominator.deg());
        if degree == 0 {
            return Err(SurfaceError::Parse("constant rational map".into()));
        }
        Ok(RationalMap {
            numerator,
            denominator,
            degree,
        })
    }
}

/// Pull an elliptic surface back along a branched cover of the base line:
/// substitute t = P(s)/Q(s) into each a_i, clear the substitution denominator
/// by the admissible rescaling a_i -> Q^{i*a} a_i(P/Q), and normalize to an
/// integral primitive model. The base must have multiplicative fibers only.
pub fn pullback(
    base: &WeierstrassSurface,
    map: &RationalMap,
    name: &str,
) -> Result<WeierstrassSurface> {
    for f in classify_fibers(base)? {
        if matches!(f.kind, FiberKind::Additive) {
            return Err(SurfaceError::AdditiveBaseFiber(f.place.to_string()));
        }
    }
    let weights: [u32; 5] = [1, 2, 3, 4, 6];
    let a = base.weight;
    let mut raw: Vec<RatPoly> = Vec::new();
    for (idx, ai) in base.coefficients().iter().enumerate() {
        let n = weights[idx] * a; // deg a_i <= n
        raw.push(RatPoly::from(substitute_homogeneous(
            ai,
            n as usize,
            &map.numerator,
            &map.denominator,
        )));
    }
    let raw: [RatPoly; 5] = raw.try_into().unwrap();
    let mut cover = WeierstrassSurface::normalize_integral_model(name, raw)?;
    cover.declared_bad_primes = None;
    Ok(cover)
}

/// Q^n * f(P/Q) for deg f <= n, as an integer polynomial.
fn substitute_homogeneous(f: &IntPoly, n: usize, p: &IntPoly, q: &IntPoly) -> IntPoly {
    assert!(f.is_zero() || f.deg() <= n);
    let mut acc = IntPoly::zero();
    for j in 0..=n {
        let c = f.coeff(j);
        if !c.is_zero() {
            let term = IntPoly::constant(c)
                .mul(&p.pow(j as u32))
                .mul(&q.pow((n - j) as u32));
            acc = acc.add(&term);
        }
    }
    acc
}

/// A branch target for ramification profiles: a rational point, the point at
/// infinity, or a conjugate pair of points cut out by an irreducible
/// quadratic.
#[derive(Debug, Clone)]
pub enum RamTarget {
    Rational(BigRational),
    Infinity,
    /// q(t) = alpha t^2 + beta t + gamma, irreducible over the rationals.
    QuadraticPair(IntPoly),
}

/// The ramification partition of a target under the map: the multiset of
/// local multiplicities of the preimages (geometric points), summing to the
/// degree (twice the degree for a quadratic pair). Sorted ascending.
pub fn ramification_profile(map: &RationalMap, target: &RamTarget) -> Result<Vec<usize>> {
    let d = map.degree;
    let (poly, total): (RatPoly, usize) = match target {
        RamTarget::Rational(t0) => {
            let f = RatPoly::from(map.numerator.clone())
                .sub(&RatPoly::from(map.denominator.clone()).scale(t0));
            (f, d)
        }
        RamTarget::Infinity => (RatPoly::from(map.denominator.clone()), d),
        RamTarget::QuadraticPair(q) => {
            if q.deg() != 2 {
                return Err(SurfaceError::Parse("quadratic pair target must have degree 2".into()));
            }
            // Res_t(q(t), P - tQ) = alpha P^2 + beta P Q + gamma Q^2.
            let p = &map.numerator;
            let qq = &map.denominator;
            let h = p
                .mul(p)
                .scale(&q.coeff(2))
                .add(&p.mul(qq).scale(&q.coeff(1)))
                .add(&qq.mul(qq).scale(&q.coeff(0)));
            (RatPoly::from(h), 2 * d)
        }
    };
    let mut parts: Vec<usize> = Vec::new();
    let mut covered = 0usize;
    if !poly.is_zero() && poly.deg() > 0 {
        let (num, _) = poly.clear_denominators();
        let (_, factors) = factor_rational_poly(&RatPoly::from(num))?;
        for (pi, m) in factors {
            for _ in 0..pi.deg() {
                parts.push(m as usize);
                covered += m as usize;
            }
        }
    }
    // Whatever multiplicity is missing sits at the preimage s = infinity.
    if covered < total {
        parts.push(total - covered);
    }
    parts.sort_unstable();
    Ok(parts)
}

/// Dimension of the non-trivial part of H^2 for a degree-d cover of a base
/// with only multiplicative fibers. The cover's geometric bad points are the
/// preimages of the base's bad points; each branch target with ramification
/// partition {e_i} contributes (number of parts) = d - sum(e_i - 1) points.
/// Hence the dimension is d * (number of base bad points) minus the total
/// ramification excess over the bad targets, minus 4.
pub fn cover_dimension(d: usize, base_bad_points: usize, bad_profiles: &[Vec<usize>]) -> i64 {
    let excess: usize = bad_profiles
        .iter()
        .flat_map(|p| p.iter().map(|&e| e - 1))
        .sum();
    (d * base_bad_points) as i64 - excess as i64 - 4
}
