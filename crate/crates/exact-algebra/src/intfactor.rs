use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::fmt;

use crate::{AlgebraError, Result};

const TRIAL_BOUND: u64 = 1_000_000;
const RHO_BUDGET: u64 = 50_000_000;

static SMALL_PRIMES: Lazy<Vec<u64>> = Lazy::new(|| {
    let n = TRIAL_BOUND as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2usize;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (2..=n).filter(|&i| sieve[i]).map(|i| i as u64).collect()
});

/// Sign and ascending list of (prime, exponent) pairs; the signed product of
/// prime powers reproduces the input exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub sign: i8,
    pub factors: Vec<(BigInt, u32)>,
}

impl PrimeFactorization {
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign as i64);
        for (p, e) in &self.factors {
            for _ in 0..*e {
                v *= p;
            }
        }
        v
    }

    pub fn primes(&self) -> Vec<BigInt> {
        self.factors.iter().map(|(p, _)| p.clone()).collect()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-1")?;
            if !self.factors.is_empty() {
                write!(f, " * ")?;
            }
        } else if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| {
                if *e == 1 {
                    p.to_string()
                } else {
                    format!("{}^{}", p, e)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    // m < 2^64, so the product of two residues fits in u128.
    (a * b) % m
}

fn powmod(mut b: u128, mut e: u128, m: u128) -> u128 {
    let mut acc: u128 = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        e >>= 1;
        b = mulmod(b, b, m);
    }
    acc
}

/// Deterministic Miller-Rabin for u64 (the 7-base set valid below 3.3 * 10^24).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let n128 = n as u128;
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &[2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = powmod(a as u128, d as u128, n128);
        if x == 1 || x == n128 - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n128);
            if x == n128 - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

fn miller_rabin_big(n: &BigInt, bases: &[u64]) -> bool {
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= &two;
        s += 1;
    }
    'outer: for &a in bases {
        let a = BigInt::from(a).mod_floor(n);
        if a.is_zero() {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == nm1 {
            continue;
        }
        for _ in 0..s.saturating_sub(1) {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Threshold below which the fixed Miller-Rabin base set is a proven
/// deterministic primality test (3,317,044,064,679,887,385,961,981).
static MR_DETERMINISTIC_BOUND: Lazy<BigInt> = Lazy::new(|| {
    "3317044064679887385961981".parse::<BigInt>().unwrap()
});

const MR_BASES: [u64; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Primality test: deterministic Miller-Rabin below the proven bound,
/// Baillie-PSW (MR base 2 + strong Lucas) above it.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() || n < &BigInt::from(2) {
        return false;
    }
    if let Some(u) = n.to_u64() {
        return is_prime_u64(u);
    }
    if n.is_even() {
        return false;
    }
    if n < &MR_DETERMINISTIC_BOUND {
        return miller_rabin_big(n, &MR_BASES);
    }
    miller_rabin_big(n, &[2]) && strong_lucas_prp(n)
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas_prp(n: &BigInt) -> bool {
    // Find D = 5, -7, 9, -11, ... with kronecker(D, n) = -1.
    let mut d = BigInt::from(5);
    loop {
        let k = crate::kronecker::kronecker(&d, n);
        if k == -1 {
            break;
        }
        if k == 0 && d.abs() != *n {
            return false;
        }
        d = if d.is_positive() {
            -(&d + BigInt::from(2))
        } else {
            -(&d - BigInt::from(2))
        };
    }
    let p = BigInt::one();
    let q = (BigInt::one() - &d) / BigInt::from(4);
    // n + 1 = s * 2^r with s odd
    let np1 = n + BigInt::one();
    let mut s = np1.clone();
    let mut r = 0u32;
    while s.is_even() {
        s /= BigInt::from(2);
        r += 1;
    }
    // Compute U_s, V_s mod n by binary ladder.
    let mut u = BigInt::zero();
    let mut v = BigInt::from(2);
    let mut qk = BigInt::one();
    let bits = s.bits();
    let inv2 = BigInt::from(2).modpow(&(n - BigInt::from(2)), n);
    for i in (0..bits).rev() {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if s.bit(i) {
            // add one: U' = (P U + V)/2, V' = (D U + P V)/2
            let un = ((&p * &u + &v) * &inv2).mod_floor(n);
            let vn = ((&d * &u + &p * &v) * &inv2).mod_floor(n);
            u = un;
            v = vn;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 0..r.saturating_sub(1) {
        v = (&v * &v - BigInt::from(2) * &qk).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// Brent's variant of Pollard rho with a deterministic parameter schedule.
/// Returns a nontrivial factor or None if the iteration budget is exhausted.
fn brent_rho(n: &BigInt, budget: u64) -> Option<BigInt> {
    if n.is_even() {
        return Some(BigInt::from(2));
    }
    for c in 1u64..=20 {
        let cc = BigInt::from(c);
        let mut y = BigInt::from(2);
        let m = 128u64;
        let mut g = BigInt::one();
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut steps = 0u64;
        while g.is_one() && steps < budget {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &cc).mod_floor(n);
            }
            let mut k = 0u64;
            while k < r && g.is_one() {
                ys = y.clone();
                let lim = m.min(r - k);
                for _ in 0..lim {
                    y = (&y * &y + &cc).mod_floor(n);
                    q = (&q * (&x - &y).abs()).mod_floor(n);
                }
                g = q.gcd(n);
                k += m;
                steps += lim;
            }
            r *= 2;
            if r > budget {
                break;
            }
        }
        if g == *n {
            // backtrack
            loop {
                ys = (&ys * &ys + &cc).mod_floor(n);
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if !g.is_one() && g != *n {
            return Some(g);
        }
    }
    None
}

/// Complete factorization of a nonzero integer: trial division to 10^6, then
/// Pollard rho (Brent) with primality certification of every cofactor. If a
/// composite cofactor resists the budget, the error names it rather than
/// returning a possibly incomplete factorization.
pub fn factor_integer(n: &BigInt) -> Result<PrimeFactorization> {
    if n.is_zero() {
        return Err(AlgebraError::ZeroInput);
    }
    let sign: i8 = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    for &p in SMALL_PRIMES.iter() {
        if m.is_one() {
            break;
        }
        let pb = BigInt::from(p);
        if (&pb * &pb) > m {
            break;
        }
        let mut e = 0u32;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        if e > 0 {
            factors.push((pb, e));
        }
    }
    let mut stack = vec![m];
    let mut large: Vec<BigInt> = Vec::new();
    while let Some(c) = stack.pop() {
        if c.is_one() {
            continue;
        }
        if is_prime(&c) {
            large.push(c);
            continue;
        }
        match brent_rho(&c, RHO_BUDGET) {
            Some(d) => {
                let e = &c / &d;
                stack.push(d);
                stack.push(e);
            }
            None => return Err(AlgebraError::UnfactoredCofactor(c)),
        }
    }
    for p in large {
        match factors.iter_mut().find(|(q, _)| *q == p) {
            Some((_, e)) => *e += 1,
            None => factors.push((p, 1)),
        }
    }
    factors.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(PrimeFactorization { sign, factors })
}

/// Least prime strictly greater than n.
pub fn next_prime(n: &BigInt) -> BigInt {
    let mut c = n + BigInt::one();
    if c < BigInt::from(2) {
        return BigInt::from(2);
    }
    if c.is_even() && c != BigInt::from(2) {
        c += BigInt::one();
    }
    while !is_prime(&c) {
        c += BigInt::from(2);
    }
    c
}
