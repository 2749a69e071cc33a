use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;
use crate::ratpoly::RatPoly;
use crate::{AlgebraError, Result};

/// Resultant of two nonzero integer polynomials by the subresultant
/// pseudo-remainder sequence (fraction-free, controls coefficient growth).
pub fn resultant_int(a: &IntPoly, b: &IntPoly) -> Result<BigInt> {
    if a.is_zero() || b.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut sign = 1i32;
    if a.deg() < b.deg() {
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    // Res(c, g) = c^{deg g}; note deg a >= deg b here.
    if b.deg() == 0 {
        let r = pow_bigint(&b.leading_coeff(), a.deg() as u32);
        return Ok(if sign < 0 { -r } else { r });
    }
    // Pull out contents: Res(ca*A, cb*B) = ca^{deg B} cb^{deg A} Res(A, B).
    let ca = a.content();
    let cb = b.content();
    let scale = pow_bigint(&ca, b.deg() as u32) * pow_bigint(&cb, a.deg() as u32);
    a = a.primitive_part();
    b = b.primitive_part();
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        let divisor = &g * pow_bigint(&h, delta as u32);
        a = b;
        b = IntPoly::new(r.coeffs().iter().map(|c| c / &divisor).collect());
        g = a.leading_coeff();
        h = if delta == 0 {
            h
        } else {
            // h <- g^delta / h^(delta-1), exact in the subresultant sequence
            let num = pow_bigint(&g, delta as u32);
            let den = pow_bigint(&h, (delta - 1) as u32);
            num / den
        };
        if b.deg() == 0 {
            let num = pow_bigint(&b.leading_coeff(), a.deg() as u32);
            let den = pow_bigint(&h, (a.deg() - 1) as u32);
            let res = &scale * (num / den);
            return Ok(if sign < 0 { -res } else { res });
        }
    }
}

fn pow_bigint(b: &BigInt, mut e: u32) -> BigInt {
    let mut base = b.clone();
    let mut acc = BigInt::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

fn pow_rat(b: &BigRational, e: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= b;
    }
    acc
}

/// Resultant of two nonzero rational polynomials.
pub fn poly_resultant(f: &RatPoly, g: &RatPoly) -> Result<BigRational> {
    if f.is_zero() || g.is_zero() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok(pow_rat(&f.leading_coeff(), g.deg() as u32));
    }
    if g.deg() == 0 {
        return Ok(pow_rat(&g.leading_coeff(), f.deg() as u32));
    }
    let (fi, df) = f.clear_denominators();
    let (gi, dg) = g.clear_denominators();
    let r = resultant_int(&fi, &gi)?;
    // Res(c*F, G) = c^{deg G} Res(F, G), so undo the clearing factors.
    let den = pow_bigint(&df, g.deg() as u32) * pow_bigint(&dg, f.deg() as u32);
    Ok(BigRational::new(r, den))
}

/// Discriminant via disc(f) = (-1)^{d(d-1)/2} * Res(f, f') / lc(f).
pub fn poly_discriminant(f: &RatPoly) -> Result<BigRational> {
    match f.degree() {
        None => Err(AlgebraError::ZeroPolynomial),
        Some(0) => Err(AlgebraError::Domain(
            "discriminant needs degree >= 1".into(),
        )),
        Some(d) => {
            let fp = f.derivative();
            let res = if fp.is_zero() {
                BigRational::zero()
            } else {
                poly_resultant(f, &fp)?
            };
            let mut disc = res / f.leading_coeff();
            if (d * (d - 1) / 2) % 2 == 1 {
                disc = -disc;
            }
            Ok(disc)
        }
    }
}

/// Monic gcd over Q, computed fraction-free on primitive integer polynomials.
pub fn rat_gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (mut a, _) = f.clear_denominators();
    let (mut b, _) = g.clear_denominators();
    a = a.primitive_positive();
    b = b.primitive_positive();
    if a.deg() < b.deg() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.deg() == 0 {
            return RatPoly::one();
        }
        let r = a.pseudo_rem(&b).primitive_positive();
        a = b;
        b = r;
    }
    RatPoly::from(a).monic()
}

/// Integer-polynomial gcd, primitive with positive leading coefficient.
pub fn int_gcd(f: &IntPoly, g: &IntPoly) -> IntPoly {
    if f.is_zero() {
        return g.primitive_positive();
    }
    if g.is_zero() {
        return f.primitive_positive();
    }
    let h = rat_gcd(&RatPoly::from(f), &RatPoly::from(g));
    let (hi, _) = h.clear_denominators();
    hi.primitive_positive()
}
