use exact_algebra::kronecker_i64;
use serde::Serialize;
use std::collections::BTreeSet;

/// A quadratic field Q(sqrt(m)) with m squarefree, m != 0, 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadraticField {
    pub m: i64,
    /// Field discriminant: m if m = 1 mod 4, else 4m.
    pub disc: i64,
    pub real: bool,
}

impl QuadraticField {
    pub fn new(m: i64) -> Option<Self> {
        if m == 0 || m == 1 || !is_squarefree(m) {
            return None;
        }
        let disc = if m.rem_euclid(4) == 1 { m } else { 4 * m };
        Some(QuadraticField {
            m,
            disc,
            real: m > 0,
        })
    }

    /// p is inert in the field iff the Kronecker symbol of the discriminant
    /// at p is -1.
    pub fn is_inert(&self, p: u64) -> bool {
        kronecker_i64(self.disc, p as i64) == -1
    }
}

fn is_squarefree(m: i64) -> bool {
    let mut n = m.unsigned_abs();
    let mut d = 2u64;
    while d * d <= n {
        if n % (d * d) == 0 {
            return false;
        }
        while n % d == 0 {
            n /= d;
        }
        d += 1;
    }
    true
}

/// All quadratic fields of the given sign unramified outside S: squarefree m
/// with prime support contained in S, and m = 1 mod 4 whenever 2 is not in S
/// (so that the discriminant stays supported on S). Sorted by |m|.
pub fn enumerate_quadratic_fields(s: &BTreeSet<u64>, real: bool) -> Vec<QuadraticField> {
    let primes: Vec<i64> = s.iter().map(|&p| p as i64).collect();
    let allow_even_disc = s.contains(&2);
    let mut out = Vec::new();
    for mask in 0..(1u32 << primes.len()) {
        let mut m: i64 = 1;
        for (i, &p) in primes.iter().enumerate() {
            if mask & (1 << i) != 0 {
                m *= p;
            }
        }
        if !real {
            m = -m;
        }
        if m == 1 {
            continue;
        }
        if !allow_even_disc && m.rem_euclid(4) != 1 {
            continue;
        }
        if let Some(f) = QuadraticField::new(m) {
            out.push(f);
        }
    }
    out.sort_by_key(|f| f.m.abs());
    out
}
