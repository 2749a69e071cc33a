use crate::intfactor::is_prime_u64;
use crate::{AlgebraError, Result};

/// Element of F_{p^k} for k <= 3: coefficient vector (c0, c1, c2) of a
/// residue modulo the context's defining polynomial, low degree first.
pub type FqElem = [u64; 3];

/// The field F_{p^k}, k <= 3, as F_p[x]/(modulus) with the modulus chosen
/// deterministically: the monic irreducible of degree k whose coefficient
/// vector (c0, ..., c_{k-1}) is lexicographically least. This makes every
/// downstream count reproducible bit-for-bit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FqContext {
    pub p: u64,
    pub k: usize,
    pub q: u64,
    /// Coefficients c0..c_{k-1} of the monic modulus x^k + c_{k-1}x^{k-1} + ... + c0.
    pub modulus: [u64; 3],
}

impl FqContext {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if !(1..=3).contains(&k) {
            return Err(AlgebraError::BadExtensionDegree(k));
        }
        let q = p.pow(k as u32);
        let modulus = if k == 1 {
            [0, 0, 0]
        } else {
            find_modulus(p, k)
        };
        Ok(FqContext { p, k, q, modulus })
    }

    pub fn zero(&self) -> FqElem {
        [0, 0, 0]
    }

    pub fn one(&self) -> FqElem {
        [1 % self.p, 0, 0]
    }

    pub fn from_u64(&self, n: u64) -> FqElem {
        [n % self.p, 0, 0]
    }

    pub fn from_i64(&self, n: i64) -> FqElem {
        let r = n.rem_euclid(self.p as i64) as u64;
        [r, 0, 0]
    }

    #[inline]
    fn reduce_add(p: u64, s: u64) -> u64 {
        if s >= p {
            s - p
        } else {
            s
        }
    }

    #[inline]
    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p;
        [
            Self::reduce_add(p, a[0] + b[0]),
            Self::reduce_add(p, a[1] + b[1]),
            Self::reduce_add(p, a[2] + b[2]),
        ]
    }

    #[inline]
    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p;
        [
            Self::reduce_add(p, a[0] + p - b[0]),
            Self::reduce_add(p, a[1] + p - b[1]),
            Self::reduce_add(p, a[2] + p - b[2]),
        ]
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.p;
        [(p - a[0]) % p, (p - a[1]) % p, (p - a[2]) % p]
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        let p = self.p as u128;
        let k = self.k;
        if k == 1 {
            return [((a[0] as u128 * b[0] as u128) % p) as u64, 0, 0];
        }
        let mut prod = [0u128; 5];
        for i in 0..k {
            if a[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] += a[i] as u128 * b[j] as u128;
            }
        }
        // Reduce degrees 2k-2 .. k using x^k = -(c_{k-1} x^{k-1} + ... + c0).
        for d in (k..=2 * k - 2).rev() {
            let c = prod[d] % p;
            if c == 0 {
                prod[d] = 0;
                continue;
            }
            prod[d] = 0;
            for j in 0..k {
                let m = self.modulus[j] as u128;
                if m != 0 {
                    // subtract c * m at position d-k+j
                    prod[d - k + j] += (p - (c * m) % p) * 1;
                }
            }
        }
        [
            (prod[0] % p) as u64,
            (prod[1] % p) as u64,
            if k > 2 { (prod[2] % p) as u64 } else { 0 },
        ]
    }

    pub fn pow(&self, mut a: FqElem, mut e: u64) -> FqElem {
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            e >>= 1;
            a = self.mul(a, a);
        }
        acc
    }

    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a != self.zero(), "inverse of zero");
        self.pow(a, self.q - 2)
    }

    /// Quadratic-residue test by Euler's criterion (odd q); zero counts as square.
    pub fn is_square_euler(&self, a: FqElem) -> bool {
        if a == self.zero() {
            return true;
        }
        self.pow(a, (self.q - 1) / 2) == self.one()
    }

    /// Absolute trace down to F_p (an element of the prime field).
    pub fn trace(&self, a: FqElem) -> FqElem {
        let mut t = a;
        let mut x = a;
        for _ in 0..self.k - 1 {
            x = self.pow(x, self.p);
            t = self.add(t, x);
        }
        t
    }

    /// Bijection onto 0..q: c0 + c1*p + c2*p^2.
    pub fn index(&self, a: FqElem) -> usize {
        (a[0] + a[1] * self.p + a[2] * self.p * self.p) as usize
    }

    pub fn elem_from_index(&self, mut i: u64) -> FqElem {
        let p = self.p;
        let c0 = i % p;
        i /= p;
        let c1 = i % p;
        i /= p;
        [c0, c1, i % p]
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.q).map(move |i| self.elem_from_index(i))
    }

    /// Evaluate a polynomial given by prime-field coefficients (ascending).
    pub fn eval_prime_coeffs(&self, coeffs: &[u64], x: FqElem) -> FqElem {
        let mut acc = self.zero();
        for &c in coeffs.iter().rev() {
            acc = self.mul(acc, x);
            acc = self.add(acc, self.from_u64(c));
        }
        acc
    }
}

fn find_modulus(p: u64, k: usize) -> [u64; 3] {
    // Lexicographically least (c0, ..., c_{k-1}) with x^k + ... irreducible;
    // for k in {2, 3} irreducibility is equivalent to having no root in F_p.
    let total = p.pow(k as u32);
    for idx in 0..total {
        // idx encodes (c0, ..., c_{k-1}) with c0 most significant for lex order
        let mut c = [0u64; 3];
        let mut rem = idx;
        for j in (0..k).rev() {
            c[j] = rem % p;
            rem /= p;
        }
        if no_root(p, k, &c) {
            return c;
        }
    }
    unreachable!("an irreducible polynomial of degree k always exists")
}

fn no_root(p: u64, k: usize, c: &[u64; 3]) -> bool {
    for x in 0..p {
        let mut acc: u128 = 1; // monic leading coefficient
        for j in (0..k).rev() {
            acc = (acc * x as u128 + c[j] as u128) % p as u128;
        }
        if acc == 0 {
            return false;
        }
    }
    true
}

/// All roots of a nonzero polynomial over F_{p^k} with multiplicity, found by
/// exhaustive evaluation and repeated deflation (q <= p^3 is small by design).
pub fn fq_roots(ctx: &FqContext, coeffs: &[FqElem]) -> Result<Vec<(FqElem, u32)>> {
    let mut cs: Vec<FqElem> = coeffs.to_vec();
    while cs.last().is_some_and(|&c| c == ctx.zero()) {
        cs.pop();
    }
    if cs.is_empty() {
        return Err(AlgebraError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for i in 0..ctx.q {
        let x = ctx.elem_from_index(i);
        let mut m = 0u32;
        loop {
            let mut acc = ctx.zero();
            for c in cs.iter().rev() {
                acc = ctx.add(ctx.mul(acc, x), *c);
            }
            if acc != ctx.zero() || cs.len() <= 1 {
                break;
            }
            // synthetic division by (X - x)
            let mut q = vec![ctx.zero(); cs.len() - 1];
            let mut carry = ctx.zero();
            for j in (1..cs.len()).rev() {
                carry = ctx.add(ctx.mul(carry, x), cs[j]);
                q[j - 1] = carry;
            }
            cs = q;
            m += 1;
        }
        if m > 0 {
            out.push((x, m));
        }
    }
    Ok(out)
}
