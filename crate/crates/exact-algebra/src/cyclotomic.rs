use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;
use crate::{AlgebraError, Result};

/// The n-th cyclotomic polynomial, computed as (x^n - 1) divided by the
/// product of Phi_d over proper divisors d of n. Exact integer arithmetic.
pub fn cyclotomic(n: u32) -> Result<IntPoly> {
    if n == 0 {
        return Err(AlgebraError::Domain("cyclotomic(0) undefined".into()));
    }
    Ok(cyclo_rec(n))
}

fn cyclo_rec(n: u32) -> IntPoly {
    // x^n - 1
    let mut v = vec![BigInt::zero(); n as usize + 1];
    v[0] = -BigInt::one();
    v[n as usize] = BigInt::one();
    let mut num = IntPoly::new(v);
    for d in 1..n {
        if n % d == 0 {
            num = num.div_exact(&cyclo_rec(d));
        }
    }
    num
}
