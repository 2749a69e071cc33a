//! Irreducible factorization in Z[x] for the small degrees that arise from
//! discriminants of elliptic fibrations (deg <= ~40). Strategy: squarefree
//! decomposition, then for each squarefree primitive part a single "big prime"
//! Cantor-Zassenhaus factorization modulo a prime exceeding twice the Mignotte
//! coefficient bound, followed by subset recombination. All randomness is a
//! fixed-seed ChaCha stream, so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::intfactor::next_prime;
use crate::intpoly::IntPoly;
use crate::ratpoly::RatPoly;
use crate::squarefree::squarefree_decomposition;
use crate::Result;

/// Factor a nonzero rational polynomial into irreducible primitive integer
/// polynomials (positive leading coefficient) with multiplicities, plus the
/// rational constant making the product exact.
pub fn factor_rational_poly(f: &RatPoly) -> Result<(BigRational, Vec<(IntPoly, u32)>)> {
    if f.is_zero() {
        return Err(crate::AlgebraError::ZeroPolynomial);
    }
    if f.deg() == 0 {
        return Ok((f.leading_coeff(), vec![]));
    }
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    for (sf, mult) in squarefree_decomposition(f)? {
        let (sfi, _) = sf.clear_denominators();
        let prim = sfi.primitive_positive();
        for irr in factor_squarefree_primitive(&prim) {
            factors.push((irr, mult));
        }
    }
    // Deterministic order: by degree, then coefficient vectors.
    factors.sort_by(|a, b| {
        (a.0.deg(), a.0.coeffs()).cmp(&(b.0.deg(), b.0.coeffs()))
    });
    let mut prod = RatPoly::one();
    for (g, m) in &factors {
        prod = prod.mul(&RatPoly::from(g).pow(*m));
    }
    let c = f.leading_coeff() / prod.leading_coeff();
    Ok((c, factors))
}

/// Factor a squarefree primitive integer polynomial into irreducibles.
pub fn factor_squarefree_primitive(f: &IntPoly) -> Vec<IntPoly> {
    let n = match f.degree() {
        None | Some(0) => return vec![],
        Some(n) => n,
    };
    if n == 1 {
        return vec![f.primitive_positive()];
    }
    // Mignotte-style bound on the coefficients of lc(f) * (any monic-scaled
    // factor): 2^n * (n+1) * max|coeff| * |lc| is comfortably sufficient here.
    let bound: BigInt = (BigInt::one() << n)
        * BigInt::from(n as u64 + 1)
        * f.max_abs_coeff()
        * f.leading_coeff().abs();
    let mut p = next_prime(&(BigInt::from(2) * &bound));
    // Need p not dividing lc(f) and f squarefree mod p.
    loop {
        if !(f.leading_coeff().mod_floor(&p)).is_zero() {
            let fb = ModPoly::from_int(f, &p);
            let d = fb.derivative();
            if !d.is_zero() && fb.gcd(&d).deg() == 0 {
                break;
            }
        }
        p = next_prime(&p);
    }
    let fb = ModPoly::from_int(f, &p).monic();
    let mut modular = factor_modp(&fb, &p);
    modular.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));

    // Subset recombination with symmetric lifting.
    let mut remaining = f.clone();
    let mut avail: Vec<ModPoly> = modular;
    let mut out: Vec<IntPoly> = Vec::new();
    let mut subset_size = 1usize;
    'outer: while avail.len() > 0 {
        if subset_size > avail.len() {
            // Whatever remains is irreducible.
            out.push(remaining.primitive_positive());
            break;
        }
        let idxs: Vec<usize> = (0..avail.len()).collect();
        for combo in combinations(&idxs, subset_size) {
            let mut cand = ModPoly::constant(remaining.leading_coeff().mod_floor(&p), &p);
            for &i in &combo {
                cand = cand.mul(&avail[i]);
            }
            let lifted = cand.symmetric_lift().primitive_positive();
            if lifted.deg() > 0 && IntPoly::divides(&lifted, &remaining) {
                remaining = remaining.div_exact(&lifted);
                out.push(lifted);
                // remove used modular factors (descending to keep indices valid)
                let mut used = combo.clone();
                used.sort_unstable_by(|a, b| b.cmp(a));
                for i in used {
                    avail.remove(i);
                }
                if remaining.deg() == 0 {
                    break 'outer;
                }
                continue 'outer;
            }
        }
        subset_size += 1;
    }
    if remaining.degree().map_or(false, |d| d > 0) && avail.is_empty() {
        out.push(remaining.primitive_positive());
    }
    out.sort_by(|a, b| (a.deg(), a.coeffs()).cmp(&(b.deg(), b.coeffs())));
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    let n = items.len();
    if k > n {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Dense polynomial over F_p for a big prime p, ascending coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ModPoly {
    coeffs: Vec<BigInt>,
    p: BigInt,
}

impl ModPoly {
    fn new(mut coeffs: Vec<BigInt>, p: &BigInt) -> Self {
        for c in coeffs.iter_mut() {
            *c = c.mod_floor(p);
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ModPoly {
            coeffs,
            p: p.clone(),
        }
    }

    fn from_int(f: &IntPoly, p: &BigInt) -> Self {
        ModPoly::new(f.coeffs().to_vec(), p)
    }

    fn constant(c: BigInt, p: &BigInt) -> Self {
        ModPoly::new(vec![c], p)
    }

    fn x(p: &BigInt) -> Self {
        ModPoly::new(vec![BigInt::zero(), BigInt::one()], p)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = modinv(&self.lc(), &self.p);
        ModPoly::new(
            self.coeffs.iter().map(|c| c * &inv).collect(),
            &self.p,
        )
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &Vec<BigInt>, i: usize| v.get(i).cloned().unwrap_or_else(BigInt::zero);
        ModPoly::new(
            (0..n)
                .map(|i| get(&self.coeffs, i) - get(&o.coeffs, i))
                .collect(),
            &self.p,
        )
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::new(vec![], &self.p);
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        ModPoly::new(v, &self.p)
    }

    fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::new(vec![], &self.p);
        }
        ModPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
            &self.p,
        )
    }

    /// Remainder of self modulo monic divisor d.
    fn rem_monic(&self, d: &Self) -> Self {
        let dd = d.deg();
        let mut r = self.clone();
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let c = r.lc();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(d.coeffs.iter().map(|a| a * &c));
            r = r.sub(&ModPoly::new(sub, &self.p));
        }
        r
    }

    fn divexact_monic(&self, d: &Self) -> Self {
        let dd = d.deg();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(dd)];
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let c = r.lc();
            q[shift] = c.clone();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(d.coeffs.iter().map(|a| a * &c));
            r = r.sub(&ModPoly::new(sub, &self.p));
        }
        debug_assert!(r.is_zero());
        ModPoly::new(q, &self.p)
    }

    fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem_monic(&b.monic());
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    fn mulmod(&self, o: &Self, m: &Self) -> Self {
        self.mul(o).rem_monic(m)
    }

    fn powmod(&self, e: &BigInt, m: &Self) -> Self {
        let mut acc = ModPoly::constant(BigInt::one(), &self.p);
        let mut base = self.rem_monic(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        base = acc;
        base
    }

    /// Lift to Z[x] with coefficients in (-p/2, p/2].
    fn symmetric_lift(&self) -> IntPoly {
        let half = &self.p / BigInt::from(2);
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c > &half {
                        c - &self.p
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }
}

fn modinv(a: &BigInt, p: &BigInt) -> BigInt {
    a.modpow(&(p - BigInt::from(2)), p)
}

/// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
/// monic squarefree polynomial modulo an odd prime.
fn factor_modp(f: &ModPoly, p: &BigInt) -> Vec<ModPoly> {
    let mut out = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_CA57);
    let mut fstar = f.clone();
    let x = ModPoly::x(p);
    let mut h = x.clone();
    let mut d = 1usize;
    while fstar.deg() >= 2 * d {
        h = h.powmod(p, &fstar);
        let g = h.sub(&x).gcd(&fstar);
        if g.deg() > 0 {
            edf(&g, d, p, &mut rng, &mut out);
            fstar = fstar.divexact_monic(&g);
            h = h.rem_monic(&fstar);
        }
        d += 1;
    }
    if fstar.deg() > 0 {
        out.push(fstar.monic());
    }
    out
}

fn edf(g: &ModPoly, d: usize, p: &BigInt, rng: &mut ChaCha8Rng, out: &mut Vec<ModPoly>) {
    if g.deg() == d {
        out.push(g.monic());
        return;
    }
    // exponent (p^d - 1) / 2
    let mut pd = BigInt::one();
    for _ in 0..d {
        pd *= p;
    }
    let e = (&pd - BigInt::one()) / BigInt::from(2);
    loop {
        let r = random_poly(g.deg(), p, rng);
        if r.is_zero() {
            continue;
        }
        let s = r.powmod(&e, g);
        let t = s.sub(&ModPoly::constant(BigInt::one(), p)).gcd(g);
        if t.deg() > 0 && t.deg() < g.deg() {
            edf(&t, d, p, rng, out);
            edf(&g.divexact_monic(&t), d, p, rng, out);
            return;
        }
    }
}

fn random_poly(deg_bound: usize, p: &BigInt, rng: &mut ChaCha8Rng) -> ModPoly {
    let bits = p.bits() as usize + 8;
    let coeffs: Vec<BigInt> = (0..deg_bound)
        .map(|_| {
            let bytes: Vec<u8> = (0..(bits / 8 + 1)).map(|_| rng.gen::<u8>()).collect();
            BigInt::from_bytes_be(num_bigint::Sign::Plus, &bytes).mod_floor(p)
        })
        .collect();
    ModPoly::new(coeffs, p)
}
