use exact_algebra::{BigInt, FqContext, FqElem, IntPoly};
use num_integer::Integer;
use num_traits::ToPrimitive;
use surface_model::WeierstrassSurface;

use crate::{CountError, Result};

/// Classification of a fiber over a rational point of the base line in
/// characteristic p.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberClass {
    Good { a_t: i64 },
    Mult { n: u32, split: bool },
    Additive,
}

/// Per-fiber record: the base point (None for the point at infinity), its
/// classification, and the smooth-model point contribution.
#[derive(Debug, Clone)]
pub struct FiberCountRecord {
    pub t: Option<FqElem>,
    pub class: FiberClass,
    pub points: u64,
}

/// The surface's coefficient data reduced mod p, on both charts.
struct ReducedSurface {
    // a1, a2, a3, a4, a6 and b2, b4, b6 on the finite chart.
    a: [Vec<u64>; 5],
    b: [Vec<u64>; 3],
    delta: Vec<u64>,
    // Same data on the chart at infinity (variable u = 1/s).
    a_inf: [Vec<u64>; 5],
    b_inf: [Vec<u64>; 3],
    delta_inf: Vec<u64>,
}

fn reduce_poly(f: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f
        .coeffs()
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl ReducedSurface {
    fn new(s: &WeierstrassSurface, p: u64) -> Self {
        let a = [
            reduce_poly(&s.a1, p),
            reduce_poly(&s.a2, p),
            reduce_poly(&s.a3, p),
            reduce_poly(&s.a4, p),
            reduce_poly(&s.a6, p),
        ];
        let b = [
            reduce_poly(&s.b2, p),
            reduce_poly(&s.b4, p),
            reduce_poly(&s.b6, p),
        ];
        let a_inf = [
            reduce_poly(&s.coeff_at_infinity(0), p),
            reduce_poly(&s.coeff_at_infinity(1), p),
            reduce_poly(&s.coeff_at_infinity(2), p),
            reduce_poly(&s.coeff_at_infinity(3), p),
            reduce_poly(&s.coeff_at_infinity(4), p),
        ];
        let w = s.weight;
        let b_inf = [
            reduce_poly(&homog(&s.b2, 2 * w), p),
            reduce_poly(&homog(&s.b4, 4 * w), p),
            reduce_poly(&homog(&s.b6, 6 * w), p),
        ];
        ReducedSurface {
            a,
            b,
            delta: reduce_poly(&s.delta, p),
            a_inf,
            b_inf,
            delta_inf: reduce_poly(&s.delta_at_infinity(), p),
        }
    }
}

/// u^n * f(1/u) for deg f <= n.
fn homog(f: &IntPoly, n: u32) -> IntPoly {
    let n = n as usize;
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (i, c) in f.coeffs().iter().enumerate() {
        coeffs[n - i] = c.clone();
    }
    IntPoly::new(coeffs)
}

/// Table of squares in F_q (odd q), indexed by element index.
fn square_table(ctx: &FqContext) -> Vec<bool> {
    let mut t = vec![false; ctx.q as usize];
    for i in 0..ctx.q {
        let e = ctx.elem_from_index(i);
        t[ctx.index(ctx.mul(e, e))] = true;
    }
    t
}

/// Count projective points of the (possibly singular) Weierstrass cubic with
/// the given coefficient values over F_q.
fn count_cubic(
    ctx: &FqContext,
    sq: Option<&[bool]>,
    a_vals: &[FqElem; 5],
    b_vals: &[FqElem; 3],
) -> u64 {
    let q = ctx.q;
    let mut count = 1u64; // the point at infinity
    if ctx.p != 2 {
        // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6. The values are
        // enumerated by finite differences along x -> x + 1 inside each
        // residue row (three field additions per x instead of a Horner
        // evaluation), seeding each row with four direct evaluations.
        let sq = sq.expect("square table required in odd characteristic");
        let four = ctx.from_u64(4);
        let [b2, b4, b6] = *b_vals;
        let two_b4 = ctx.add(b4, b4);
        let eval = |x: FqElem| {
            ctx.add(
                ctx.mul(ctx.add(ctx.mul(ctx.add(ctx.mul(four, x), b2), x), two_b4), x),
                b6,
            )
        };
        let zero = ctx.zero();
        let one = ctx.one();
        let p = ctx.p;
        for row in 0..(q / p) {
            let x0 = ctx.elem_from_index(row * p);
            let x1 = ctx.add(x0, one);
            let x2 = ctx.add(x1, one);
            let x3 = ctx.add(x2, one);
            let (f0, f1, f2, f3) = (eval(x0), eval(x1), eval(x2), eval(x3));
            let mut f = f0;
            let mut d1 = ctx.sub(f1, f0);
            let mut d2 = ctx.sub(ctx.sub(f2, f1), d1);
            let d3 = ctx.sub(ctx.sub(ctx.sub(f3, f2), ctx.sub(f2, f1)), d2);
            for _ in 0..p {
                if f == zero {
                    count += 1;
                } else if sq[ctx.index(f)] {
                    count += 2;
                }
                f = ctx.add(f, d1);
                d1 = ctx.add(d1, d2);
                d2 = ctx.add(d2, d3);
            }
        }
    } else {
        // y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6 via Artin-Schreier.
        let (a1, a2, a3, a4, a6) = (a_vals[0], a_vals[1], a_vals[2], a_vals[3], a_vals[4]);
        for i in 0..q {
            let x = ctx.elem_from_index(i);
            let bb = ctx.add(ctx.mul(a1, x), a3);
            let c = ctx.add(
                ctx.mul(ctx.add(ctx.mul(ctx.add(x, a2), x), a4), x),
                a6,
            );
            if bb == ctx.zero() {
                count += 1; // squaring is a bijection
            } else {
                let inv = ctx.inv(ctx.mul(bb, bb));
                if ctx.trace(ctx.mul(c, inv)) == ctx.zero() {
                    count += 2;
                }
            }
        }
    }
    count
}

/// Multiplicity of t as a root of the reduced discriminant (coefficients in
/// F_p, the root possibly in an extension), by repeated synthetic division.
fn root_multiplicity(ctx: &FqContext, delta: &[u64], t: FqElem) -> u32 {
    let mut cs: Vec<FqElem> = delta.iter().map(|&c| ctx.from_u64(c)).collect();
    let mut m = 0u32;
    loop {
        // Evaluate and divide by (X - t) while the value is zero.
        let mut acc = ctx.zero();
        for c in cs.iter().rev() {
            acc = ctx.add(ctx.mul(acc, t), *c);
        }
        if acc != ctx.zero() || cs.len() <= 1 {
            return m;
        }
        let mut qv = vec![ctx.zero(); cs.len() - 1];
        let mut carry = ctx.zero();
        for j in (1..cs.len()).rev() {
            carry = ctx.add(ctx.mul(carry, t), cs[j]);
            qv[j - 1] = carry;
        }
        cs = qv;
        m += 1;
    }
}

fn eval_all(ctx: &FqContext, polys: &[Vec<u64>], x: FqElem) -> Vec<FqElem> {
    polys.iter().map(|p| ctx.eval_prime_coeffs(p, x)).collect()
}

/// Count the smooth projective model of a good fiber. Errors if the fiber is
/// singular (the discriminant vanishes at t).
pub fn count_fiber_good(surface: &WeierstrassSurface, ctx: &FqContext, t: FqElem) -> Result<u64> {
    let red = ReducedSurface::new(surface, ctx.p);
    if ctx.eval_prime_coeffs(&red.delta, t) == ctx.zero() {
        return Err(CountError::SingularFiber);
    }
    let sq = if ctx.p != 2 {
        Some(square_table(ctx))
    } else {
        None
    };
    let a_vals: [FqElem; 5] = eval_all(ctx, &red.a, t).try_into().unwrap();
    let b_vals: [FqElem; 3] = eval_all(ctx, &red.b, t).try_into().unwrap();
    Ok(count_cubic(ctx, sq.as_deref(), &a_vals, &b_vals))
}

/// Classify the fiber over a rational point t (None = infinity) of P^1(F_q).
pub fn classify_fiber_mod_q(
    surface: &WeierstrassSurface,
    ctx: &FqContext,
    t: Option<FqElem>,
) -> FiberClass {
    let red = ReducedSurface::new(surface, ctx.p);
    let sq = if ctx.p != 2 {
        Some(square_table(ctx))
    } else {
        None
    };
    classify_at(ctx, &red, sq.as_deref(), t).0
}

fn classify_at(
    ctx: &FqContext,
    red: &ReducedSurface,
    sq: Option<&[bool]>,
    t: Option<FqElem>,
) -> (FiberClass, u64) {
    let (a_vals, b_vals, n) = match t {
        Some(t) => {
            let n = root_multiplicity(ctx, &red.delta, t);
            let a: [FqElem; 5] = eval_all(ctx, &red.a, t).try_into().unwrap();
            let b: [FqElem; 3] = eval_all(ctx, &red.b, t).try_into().unwrap();
            (a, b, n)
        }
        None => {
            let zero = ctx.zero();
            let n = root_multiplicity(ctx, &red.delta_inf, zero);
            let a: [FqElem; 5] = eval_all(ctx, &red.a_inf, zero).try_into().unwrap();
            let b: [FqElem; 3] = eval_all(ctx, &red.b_inf, zero).try_into().unwrap();
            (a, b, n)
        }
    };
    let w = count_cubic(ctx, sq, &a_vals, &b_vals);
    if n == 0 {
        let a_t = ctx.q as i64 + 1 - w as i64;
        return (FiberClass::Good { a_t }, w);
    }
    let a_t = ctx.q as i64 + 1 - w as i64;
    let class = match a_t {
        1 => FiberClass::Mult { n, split: true },
        -1 => FiberClass::Mult { n, split: false },
        _ => FiberClass::Additive,
    };
    let points = match class {
        FiberClass::Good { .. } => unreachable!(),
        FiberClass::Mult { n, split: true } => n as u64 * ctx.q,
        FiberClass::Mult { n, split: false } => {
            if n % 2 == 1 {
                ctx.q + 2
            } else {
                2 * ctx.q + 2
            }
        }
        FiberClass::Additive => 0,
    };
    (class, points)
}

/// Total smooth-model point count N_q and component trace C_q over F_q.
///
/// C_q sums, over multiplicative fibers at rational points, the trace of
/// Frobenius on the non-identity components: n - 1 when split, and for
/// nonsplit fibers the trace of the component involution, 0 for odd n and 1
/// for even n.
pub fn surface_count(surface: &WeierstrassSurface, ctx: &FqContext) -> Result<(i64, i64)> {
    let (n, c, _) = count_impl(surface, ctx, false)?;
    Ok((n, c))
}

/// As `surface_count` but also returning the per-fiber records (intended for
/// small q).
pub fn surface_count_records(
    surface: &WeierstrassSurface,
    ctx: &FqContext,
) -> Result<(i64, i64, Vec<FiberCountRecord>)> {
    count_impl(surface, ctx, true)
}

fn count_impl(
    surface: &WeierstrassSurface,
    ctx: &FqContext,
    collect: bool,
) -> Result<(i64, i64, Vec<FiberCountRecord>)> {
    let red = ReducedSurface::new(surface, ctx.p);
    let sq = if ctx.p != 2 {
        Some(square_table(ctx))
    } else {
        None
    };
    let mut n_total = 0i64;
    let mut c_total = 0i64;
    let mut records = Vec::new();
    let mut handle = |t: Option<FqElem>| -> Result<()> {
        let (class, points) = classify_at(ctx, &red, sq.as_deref(), t);
        match class {
            FiberClass::Additive => {
                let place = match t {
                    Some(e) => format!("t with index {}", ctx.index(e)),
                    None => "infinity".to_string(),
                };
                return Err(CountError::AdditiveFiberAtGoodPrime { p: ctx.p, place });
            }
            FiberClass::Mult { n, split } => {
                c_total += if split {
                    n as i64 - 1
                } else if n % 2 == 0 {
                    1
                } else {
                    0
                };
            }
            FiberClass::Good { .. } => {}
        }
        n_total += points as i64;
        if collect {
            records.push(FiberCountRecord { t, class, points });
        }
        Ok(())
    };
    for i in 0..ctx.q {
        handle(Some(ctx.elem_from_index(i)))?;
    }
    handle(None)?;
    Ok((n_total, c_total, records))
}
