use exact_algebra::{BigInt, BigRational, RatPoly};
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use surface_model::WeierstrassSurface;

use crate::traces::{compute_frobenius_data, FrobeniusData};
use crate::{CountError, Result};

/// The degree-5 characteristic polynomial of Frobenius on the (twisted)
/// non-trivial part of H^2, after the determinant-sign twist: eigenvalues
/// {1, alpha, beta, 1/alpha, 1/beta}, so
/// Q_p(X) = (X - 1)(X^4 - s1 X^3 + (e + 2) X^2 - s1 X + 1)
/// with s1 = alpha + 1/alpha + beta + 1/beta and e = (a+1/a)(b+1/b).
#[derive(Debug, Clone, PartialEq)]
pub struct FrobeniusCharPoly {
    pub p: u64,
    pub q_poly: RatPoly,
    pub s1: BigRational,
    pub e: BigRational,
}

impl FrobeniusCharPoly {
    /// Integer form for the dataset record: (coeffs of den * Q_p ascending,
    /// den) with den | p^2 minimal.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in self.q_poly.coeffs() {
            den = den.lcm(c.denom());
        }
        let coeffs = self
            .q_poly
            .coeffs()
            .iter()
            .map(|c| (c * BigRational::from(den.clone())).to_integer())
            .collect();
        (coeffs, den)
    }

    /// The anti-reciprocal quartic factor X^4 - s1 X^3 + (e+2) X^2 - s1 X + 1.
    pub fn quartic(&self) -> RatPoly {
        let two = BigRational::from(BigInt::from(2));
        RatPoly::new(vec![
            BigRational::one(),
            -self.s1.clone(),
            self.e.clone() + two,
            -self.s1.clone(),
            BigRational::one(),
        ])
    }
}

/// Assemble Q_p from the twisted traces t1 (over F_p) and t2 (over F_{p^2}),
/// checking integrality (p t1, p^2 t2 integers), the anti-reciprocity shape,
/// and numerical purity of the roots.
pub fn assemble_charpoly(t1: &BigRational, t2: &BigRational, p: u64) -> Result<FrobeniusCharPoly> {
    let pb = BigRational::from(BigInt::from(p));
    if !(t1 * &pb).is_integer() {
        return Err(CountError::IntegralityViolation(format!(
            "p * t1 = {} not an integer",
            t1 * &pb
        )));
    }
    if !(t2 * &pb * &pb).is_integer() {
        return Err(CountError::IntegralityViolation(format!(
            "p^2 * t2 = {} not an integer",
            t2 * &pb * &pb
        )));
    }
    let five = BigRational::from(BigInt::from(5));
    if t1.abs() > five || t2.abs() > five {
        return Err(CountError::TraceOutOfRange(if t1.abs() > five {
            t1.clone()
        } else {
            t2.clone()
        }));
    }
    let s1 = t1 - BigRational::one();
    let sumsq = t2 + BigRational::from(BigInt::from(3));
    let e = (&s1 * &s1 - sumsq) / BigRational::from(BigInt::from(2));
    let chp = FrobeniusCharPoly {
        p,
        q_poly: RatPoly::zero(),
        s1: s1.clone(),
        e: e.clone(),
    };
    let quartic = chp.quartic();
    let q_poly = RatPoly::from_i64(&[-1, 1]).mul(&quartic);
    let chp = FrobeniusCharPoly { q_poly, ..chp };

    // Structural checks.
    debug_assert!(chp.q_poly.eval(&BigRational::one()).is_zero());
    debug_assert_eq!(reversed_negated(&chp.q_poly), chp.q_poly);
    let p2 = BigRational::from(BigInt::from((p * p) as i64));
    for c in chp.q_poly.coeffs() {
        if !(c * &p2).is_integer() {
            return Err(CountError::IntegralityViolation(format!(
                "p^2 * coefficient {c} not an integer"
            )));
        }
    }
    purity_check(&s1, &e)?;
    Ok(chp)
}

/// X^5 * Q(1/X) negated, for the anti-reciprocity check.
fn reversed_negated(q: &RatPoly) -> RatPoly {
    let mut cs: Vec<BigRational> = q.coeffs().to_vec();
    while cs.len() < 6 {
        cs.push(BigRational::zero());
    }
    cs.reverse();
    RatPoly::new(cs.into_iter().map(|c| -c).collect())
}

fn to_f64(r: &BigRational) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

/// All roots of the quartic must lie on the unit circle (within 1e-9): solve
/// Y^2 - s1 Y + e = 0 for u, v, then X^2 - uX + 1 = 0 for the eigenvalues.
fn purity_check(s1: &BigRational, e: &BigRational) -> Result<()> {
    let s1 = Complex64::new(to_f64(s1), 0.0);
    let e = Complex64::new(to_f64(e), 0.0);
    let disc = (s1 * s1 - 4.0 * e).sqrt();
    for u in [(s1 + disc) / 2.0, (s1 - disc) / 2.0] {
        let d = (u * u - 4.0).sqrt();
        for root in [(u + d) / 2.0, (u - d) / 2.0] {
            let r = root.norm();
            if (r - 1.0).abs() > 1e-9 {
                return Err(CountError::PurityViolation(r));
            }
        }
    }
    Ok(())
}

/// Power sums of the five twisted eigenvalues {1} + quartic roots, by
/// Newton's identities on the quartic.
fn twisted_power_sum(chp: &FrobeniusCharPoly, k: usize) -> BigRational {
    let e1 = chp.s1.clone();
    let e2 = chp.e.clone() + BigRational::from(BigInt::from(2));
    let e3 = chp.s1.clone();
    let e4 = BigRational::one();
    let mut p: Vec<BigRational> = vec![BigRational::from(BigInt::from(4))]; // p_0 = 4
    for i in 1..=k {
        let term = |j: usize, e: &BigRational| -> BigRational {
            if i > j {
                e * &p[i - j]
            } else {
                BigRational::zero()
            }
        };
        let mut pi = term(1, &e1) - term(2, &e2) + term(3, &e3) - term(4, &e4);
        // Newton correction for i <= 4: + (-1)^{i-1} * i * e_i
        if i <= 4 {
            let ei = [&e1, &e2, &e3, &e4][i - 1].clone();
            let corr = BigRational::from(BigInt::from(i as i64)) * ei;
            if i % 2 == 1 {
                pi = pi + corr;
            } else {
                pi = pi - corr;
            }
        }
        p.push(pi);
    }
    p[k].clone() + BigRational::one()
}

/// Predicted point count N_{p^k} from the characteristic polynomial, the
/// determinant sign, and the directly computed component trace C_{p^k}.
pub fn predict_count(chp: &FrobeniusCharPoly, det_sign: i8, k: usize, c_qk: i64) -> i64 {
    let tau = twisted_power_sum(chp, k);
    let raw = if det_sign < 0 && k % 2 == 1 { -tau } else { tau };
    let q = BigInt::from(chp.p.pow(k as u32));
    let n = BigRational::from(q.clone())
        * (raw + BigRational::from(BigInt::from(2 + c_qk)))
        + BigRational::one()
        + BigRational::from(&q * &q);
    n.to_integer().to_i64().expect("count fits i64")
}

/// Round-trip checks: the assembled polynomial must reproduce the measured
/// counts over F_p, F_{p^2}, and the independent cubic-extension count.
pub fn verify_cubic_oracle(data: &FrobeniusData, chp: &FrobeniusCharPoly) -> Result<()> {
    for k in 1..=3usize {
        let predicted = predict_count(chp, data.det_sign, k, data.c[k - 1]);
        if predicted != data.n[k - 1] {
            return Err(CountError::OracleMismatch {
                q: data.p.pow(k as u32),
                predicted,
                counted: data.n[k - 1],
            });
        }
    }
    Ok(())
}

/// Full pipeline for one good prime: count over the three fields, determine
/// the determinant sign, assemble the twisted characteristic polynomial, and
/// verify it against the cubic-extension oracle.
pub fn charpoly_for(
    surface: &WeierstrassSurface,
    p: u64,
) -> Result<(FrobeniusData, FrobeniusCharPoly)> {
    let data = compute_frobenius_data(surface, p)?;
    let chp = assemble_charpoly(&data.twisted_t(1), &data.twisted_t(2), p)?;
    verify_cubic_oracle(&data, &chp)?;
    Ok((data, chp))
}
