use exact_algebra::{BigInt, BigRational, FqContext};
use num_traits::{One, Signed};
use surface_model::WeierstrassSurface;

use crate::counting::surface_count;
use crate::{CountError, Result};

/// Raw counting data for a good prime p: point counts and component traces
/// over F_p, F_{p^2}, F_{p^3}, the raw traces t_k on the non-trivial part of
/// H^2 (Tate twisted), and the sign of the residual determinant eigenvalue.
///
/// The raw Frobenius eigenvalue multiset on the twisted non-trivial part is
/// {eps, alpha, beta, 1/alpha, 1/beta} with eps = det = +-1; the degree-5
/// characteristic polynomial tabulated downstream is the eps-twist, which
/// replaces eps by 1. `det_sign` records eps, determined from the cubic
/// extension count.
#[derive(Debug, Clone)]
pub struct FrobeniusData {
    pub p: u64,
    pub n: [i64; 3],
    pub c: [i64; 3],
    /// Raw traces t_1, t_2, t_3 (denominators divide p^k).
    pub t: [BigRational; 3],
    pub det_sign: i8,
}

impl FrobeniusData {
    /// The trace with the determinant sign twisted away: eps^k * t_k.
    pub fn twisted_t(&self, k: usize) -> BigRational {
        if self.det_sign < 0 && k % 2 == 1 {
            -self.t[k - 1].clone()
        } else {
            self.t[k - 1].clone()
        }
    }
}

/// Lefschetz bookkeeping: the trace on the twisted non-trivial part of H^2 is
/// (N_q - 1 - q^2)/q - 2 - C_q (subtracting the hyperplane class, the fiber
/// class, and the trivial-lattice component trace).
pub fn ntriv_trace(n_q: i64, c_q: i64, q: u64) -> Result<BigRational> {
    let num = BigInt::from(n_q) - BigInt::one() - BigInt::from(q) * BigInt::from(q);
    let t = BigRational::new(num, BigInt::from(q))
        - BigRational::from(BigInt::from(2))
        - BigRational::from(BigInt::from(c_q));
    if !(t.clone() * BigRational::from(BigInt::from(q))).is_integer() {
        return Err(CountError::NonIntegralTrace { t, q });
    }
    if t.abs() > BigRational::from(BigInt::from(5)) {
        return Err(CountError::TraceOutOfRange(t));
    }
    Ok(t)
}

/// Count over F_p, F_{p^2}, F_{p^3} and extract the raw traces plus the
/// determinant sign.
pub fn compute_frobenius_data(surface: &WeierstrassSurface, p: u64) -> Result<FrobeniusData> {
    let mut n = [0i64; 3];
    let mut c = [0i64; 3];
    let mut t: Vec<BigRational> = Vec::new();
    for k in 1..=3usize {
        let ctx = FqContext::new(p, k)?;
        let (nq, cq) = surface_count(surface, &ctx)?;
        n[k - 1] = nq;
        c[k - 1] = cq;
        t.push(ntriv_trace(nq, cq, ctx.q)?);
    }
    let det_sign = determinant_sign(&t[0], &t[1], &t[2])?;
    Ok(FrobeniusData {
        p,
        n,
        c,
        t: [t[0].clone(), t[1].clone(), t[2].clone()],
        det_sign,
    })
}

/// Determine eps = det(Frob) in {+1, -1} from the three raw power sums: with
/// u + v = eps*t1 - 1 and u^2 + v^2 = t2 + 3, the cubic power sum must equal
/// eps * (1 + (u^3 - 3u) + (v^3 - 3v)). Exactly one sign is consistent.
fn determinant_sign(t1: &BigRational, t2: &BigRational, t3: &BigRational) -> Result<i8> {
    let mut matches = Vec::new();
    for eps in [1i8, -1i8] {
        let e = BigRational::from(BigInt::from(eps as i64));
        let s1 = &e * t1 - BigRational::one(); // u + v
        let sumsq = t2 + BigRational::from(BigInt::from(3)); // u^2 + v^2
        let uv = (&s1 * &s1 - &sumsq) / BigRational::from(BigInt::from(2));
        let sumcube = &s1 * &s1 * &s1 - BigRational::from(BigInt::from(3)) * &uv * &s1;
        let p3 = sumcube - BigRational::from(BigInt::from(3)) * &s1;
        let predicted = &e * (BigRational::one() + p3);
        if &predicted == t3 {
            matches.push(eps);
        }
    }
    match matches.as_slice() {
        [eps] => Ok(*eps),
        _ => Err(CountError::AmbiguousDeterminant),
    }
}
