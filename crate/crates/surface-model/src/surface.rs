use exact_algebra::{factor_integer, BigInt, BigRational, IntPoly, RatPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::{Result, SurfaceError};

/// An elliptic surface y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with
/// integral, jointly primitive polynomial coefficients in the base parameter s.
#[derive(Debug, Clone)]
pub struct WeierstrassSurface {
    pub name: String,
    pub a1: IntPoly,
    pub a2: IntPoly,
    pub a3: IntPoly,
    pub a4: IntPoly,
    pub a6: IntPoly,
    pub b2: IntPoly,
    pub b4: IntPoly,
    pub b6: IntPoly,
    pub b8: IntPoly,
    pub c4: IntPoly,
    pub c6: IntPoly,
    pub delta: IntPoly,
    /// The weight a: least integer with deg(a_i) <= i*a for every i.
    pub weight: u32,
    /// The rescaling factor applied to reach the integral primitive model.
    pub lambda: BigRational,
    /// Registry override for the set of bad primes, if any.
    pub declared_bad_primes: Option<Vec<u64>>,
}

impl WeierstrassSurface {
    /// Build a surface from possibly non-integral coefficients by applying the
    /// admissible rescaling x -> l^2 x, y -> l^3 y (a_i -> l^i a_i) with the
    /// least positive rational l that makes the coefficients integral and
    /// jointly primitive.
    pub fn normalize_integral_model(
        name: &str,
        raw: [RatPoly; 5], // a1, a2, a3, a4, a6
    ) -> Result<Self> {
        let weights: [u32; 5] = [1, 2, 3, 4, 6];
        // Per-coefficient clearing: a_i = num_i / den_i with num_i an IntPoly.
        let mut nums: Vec<Option<(IntPoly, BigInt)>> = Vec::new();
        for r in &raw {
            if r.is_zero() {
                nums.push(None);
            } else {
                nums.push(Some(r.clear_denominators()));
            }
        }
        if nums.iter().all(|n| n.is_none()) {
            return Err(SurfaceError::Nondegenerate);
        }
        // Primes that can force an up- or down-scaling: denominator primes and
        // primes dividing every coefficient content.
        let mut prime_pool: Vec<BigInt> = Vec::new();
        let mut den_prod = BigInt::one();
        let mut content_gcd = BigInt::zero();
        for n in nums.iter().flatten() {
            den_prod *= &n.1;
            content_gcd = content_gcd.gcd(&n.0.content());
        }
        if !den_prod.is_one() {
            prime_pool.extend(factor_integer(&den_prod)?.primes());
        }
        if content_gcd.abs() > BigInt::one() {
            for p in factor_integer(&content_gcd)?.primes() {
                if !prime_pool.contains(&p) {
                    prime_pool.push(p);
                }
            }
        }
        // lambda = prod p^{v_p}, v_p = max_i ceil(-m_i / i) where m_i is the
        // p-adic valuation of a_i's content.
        let mut lambda = BigRational::one();
        for p in &prime_pool {
            let mut v_best: Option<i64> = None;
            for (idx, n) in nums.iter().enumerate() {
                let Some((num, den)) = n else { continue };
                let i = weights[idx] as i64;
                let m = val_p(&num.content(), p) - val_p(den, p);
                // ceil(-m / i)
                let v = Integer::div_ceil(&-m, &i);
                v_best = Some(v_best.map_or(v, |b| b.max(v)));
            }
            let v = v_best.unwrap_or(0);
            let pr = BigRational::from(p.clone());
            if v > 0 {
                for _ in 0..v {
                    lambda *= &pr;
                }
            } else {
                for _ in 0..(-v) {
                    lambda /= &pr;
                }
            }
        }
        let mut scaled: Vec<IntPoly> = Vec::new();
        for (idx, r) in raw.iter().enumerate() {
            let mut l_i = BigRational::one();
            for _ in 0..weights[idx] {
                l_i *= &lambda;
            }
            let s = r.scale(&l_i);
            match s.to_int_poly() {
                Some(p) => scaled.push(p),
                None => {
                    return Err(SurfaceError::Parse(format!(
                        "internal: rescaling by {lambda} did not clear a{}",
                        weights[idx]
                    )))
                }
            }
        }
        let [a1, a2, a3, a4, a6]: [IntPoly; 5] = scaled.try_into().unwrap();
        Self::from_integral(name, a1, a2, a3, a4, a6, lambda)
    }

    /// Build directly from integral coefficients (lambda = 1).
    pub fn new_integral(
        name: &str,
        a1: IntPoly,
        a2: IntPoly,
        a3: IntPoly,
        a4: IntPoly,
        a6: IntPoly,
    ) -> Result<Self> {
        Self::from_integral(name, a1, a2, a3, a4, a6, BigRational::one())
    }

    fn from_integral(
        name: &str,
        a1: IntPoly,
        a2: IntPoly,
        a3: IntPoly,
        a4: IntPoly,
        a6: IntPoly,
        lambda: BigRational,
    ) -> Result<Self> {
        let b2 = a1.mul(&a1).add(&a2.scale(&BigInt::from(4)));
        let b4 = a4.scale(&BigInt::from(2)).add(&a1.mul(&a3));
        let b6 = a3.mul(&a3).add(&a6.scale(&BigInt::from(4)));
        let b8 = a1
            .mul(&a1)
            .mul(&a6)
            .add(&a2.mul(&a6).scale(&BigInt::from(4)))
            .sub(&a1.mul(&a3).mul(&a4))
            .add(&a2.mul(&a3).mul(&a3))
            .sub(&a4.mul(&a4));
        let c4 = b2.mul(&b2).sub(&b4.scale(&BigInt::from(24)));
        let c6 = b2
            .mul(&b2)
            .mul(&b2)
            .neg()
            .add(&b2.mul(&b4).scale(&BigInt::from(36)))
            .sub(&b6.scale(&BigInt::from(216)));
        let delta = b2
            .mul(&b2)
            .mul(&b8)
            .neg()
            .sub(&b4.mul(&b4).mul(&b4).scale(&BigInt::from(8)))
            .sub(&b6.mul(&b6).scale(&BigInt::from(27)))
            .add(&b2.mul(&b4).mul(&b6).scale(&BigInt::from(9)));
        if delta.is_zero() {
            return Err(SurfaceError::Nondegenerate);
        }
        debug_assert_eq!(
            c4.mul(&c4).mul(&c4).sub(&c6.mul(&c6)),
            delta.scale(&BigInt::from(1728)),
            "c4^3 - c6^2 = 1728 delta must hold identically"
        );
        let weights: [u32; 5] = [1, 2, 3, 4, 6];
        let mut weight = 0u32;
        for (idx, a) in [&a1, &a2, &a3, &a4, &a6].iter().enumerate() {
            if let Some(d) = a.degree() {
                let i = weights[idx];
                weight = weight.max((d as u32).div_ceil(i));
            }
        }
        Ok(WeierstrassSurface {
            name: name.to_string(),
            a1,
            a2,
            a3,
            a4,
            a6,
            b2,
            b4,
            b6,
            b8,
            c4,
            c6,
            delta,
            weight,
            lambda,
            declared_bad_primes: None,
        })
    }

    /// The coefficient list [a1, a2, a3, a4, a6].
    pub fn coefficients(&self) -> [&IntPoly; 5] {
        [&self.a1, &self.a2, &self.a3, &self.a4, &self.a6]
    }

    /// Transform a coefficient to the chart at infinity: u^{i*a} * a_i(1/u).
    pub fn coeff_at_infinity(&self, idx: usize) -> IntPoly {
        let weights: [u32; 5] = [1, 2, 3, 4, 6];
        let a = self.coefficients()[idx];
        homogenize_flip(a, weights[idx] * self.weight)
    }

    /// delta on the chart at infinity: u^{12a} * delta(1/u).
    pub fn delta_at_infinity(&self) -> IntPoly {
        homogenize_flip(&self.delta, 12 * self.weight)
    }

    /// c4 on the chart at infinity: u^{4a} * c4(1/u).
    pub fn c4_at_infinity(&self) -> IntPoly {
        homogenize_flip(&self.c4, 4 * self.weight)
    }

    /// Order of vanishing of delta at the place at infinity: 12a - deg(delta).
    pub fn ord_infinity_delta(&self) -> u32 {
        12 * self.weight - self.delta.deg() as u32
    }
}

/// u^n * f(1/u) for deg f <= n: reverse the coefficients into degree n.
fn homogenize_flip(f: &IntPoly, n: u32) -> IntPoly {
    let n = n as usize;
    if f.is_zero() {
        return IntPoly::zero();
    }
    assert!(f.deg() <= n, "degree bound violated");
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        coeffs[n - i] = c.clone();
    }
    IntPoly::new(coeffs)
}

fn val_p(n: &BigInt, p: &BigInt) -> i64 {
    if n.is_zero() {
        return 0;
    }
    let mut m = n.abs();
    let mut v = 0i64;
    while (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}
