use exact_algebra::{BigInt, IntPoly};
use num_integer::Integer;
use num_traits::ToPrimitive;

/// Dense polynomial over the prime field F_p, p < 2^32, ascending
/// coefficients, used for the mod-p reduction pattern checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModPolyP {
    pub p: u64,
    pub coeffs: Vec<u64>,
}

impl ModPolyP {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPolyP { p, coeffs }
    }

    pub fn from_int_poly(f: &IntPoly, p: u64) -> Self {
        let pb = BigInt::from(p);
        let coeffs = f
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits u64"))
            .collect();
        ModPolyP::new(p, coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn one(p: u64) -> Self {
        ModPolyP::new(p, vec![1])
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    fn mulmod(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    fn inv(&self, a: u64) -> u64 {
        // Fermat inverse; p is prime and a != 0 mod p.
        let mut acc = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulmod(acc, base);
            }
            base = self.mulmod(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn lc(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.inv(self.lc());
        ModPolyP::new(
            self.p,
            self.coeffs.iter().map(|&c| self.mulmod(c, inv)).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mulmod(c, (i as u64) % self.p))
            .collect();
        ModPolyP::new(self.p, cs)
    }

    pub fn rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dlc_inv = self.inv(d.lc());
        while r.len() >= d.coeffs.len() && !r.is_empty() {
            let lead = *r.last().unwrap();
            if lead == 0 {
                r.pop();
                continue;
            }
            let f = self.mulmod(lead, dlc_inv);
            let shift = r.len() - d.coeffs.len();
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let sub = self.mulmod(f, dc);
                let idx = shift + i;
                r[idx] = (r[idx] + p - sub) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        ModPolyP::new(p, r)
    }

    pub fn div_exact(&self, d: &Self) -> Self {
        assert!(!d.is_zero());
        let p = self.p;
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; self.coeffs.len().saturating_sub(d.coeffs.len()) + 1];
        let dlc_inv = self.inv(d.lc());
        while r.len() >= d.coeffs.len() && !r.is_empty() {
            let lead = *r.last().unwrap();
            if lead == 0 {
                r.pop();
                continue;
            }
            let f = self.mulmod(lead, dlc_inv);
            let shift = r.len() - d.coeffs.len();
            q[shift] = f;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                let sub = self.mulmod(f, dc);
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        assert!(r.is_empty(), "division was not exact");
        ModPolyP::new(p, q)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = (self.mulmod(acc, x) + c) % self.p;
        }
        acc
    }

    /// f(x) = g(x^p) implies g exists with coefficients c_{ip} (p-th roots are
    /// the identity on F_p).
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let cs = self.coeffs.iter().step_by(p).copied().collect();
        ModPolyP::new(self.p, cs)
    }

    /// Squarefree decomposition in characteristic p: monic pairwise-coprime
    /// squarefree g_m with f = lc * prod g_m^m. Handles p-th-power parts by
    /// recursion on the p-th root.
    pub fn squarefree_decomposition(&self) -> Vec<(ModPolyP, u32)> {
        let mut out: Vec<(ModPolyP, u32)> = Vec::new();
        let f = self.monic();
        if f.is_zero() || f.deg() == 0 {
            return out;
        }
        let fp = f.derivative();
        if fp.is_zero() {
            // f = g(x^p)
            for (h, m) in f.pth_root().squarefree_decomposition() {
                out.push((h, m * self.p as u32));
            }
            return out;
        }
        let mut c = f.gcd(&fp);
        let mut w = f.div_exact(&c);
        let mut i = 1u32;
        while !w.is_one() {
            let y = w.gcd(&c);
            let z = w.div_exact(&y);
            if !z.is_one() {
                out.push((z.monic(), i));
            }
            w = y;
            c = c.div_exact(&w);
            i += 1;
        }
        if !c.is_one() {
            for (h, m) in c.pth_root().squarefree_decomposition() {
                out.push((h, m * self.p as u32));
            }
        }
        out.sort_by(|a, b| (a.1, a.0.deg()).cmp(&(b.1, b.0.deg())));
        out
    }
}
