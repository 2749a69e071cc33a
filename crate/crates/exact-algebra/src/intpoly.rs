use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

use crate::ratpoly::RatPoly;

/// Dense univariate polynomial over Z, coefficients in ascending degree order.
/// The leading (last) coefficient is nonzero unless the polynomial is zero,
/// in which case the coefficient vector is empty.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::new(vec![c])
    }

    pub fn constant_i64(c: i64) -> Self {
        IntPoly::constant(BigInt::from(c))
    }

    /// The monomial c * x^n.
    pub fn monomial(c: BigInt, n: usize) -> Self {
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); n + 1];
        v[n] = c;
        IntPoly { coeffs: v }
    }

    pub fn x() -> Self {
        IntPoly::monomial(BigInt::one(), 1)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with deg 0 for constants; panics on zero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of zero polynomial")
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn neg(&self) -> Self {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + other.coeff(i));
        }
        IntPoly::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Content: nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with the sign of the leading coefficient preserved.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() || c.is_one() {
            return self.clone();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Primitive part normalized to positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_part();
        if p.leading_coeff().is_negative() {
            p.neg()
        } else {
            p
        }
    }

    /// Pseudo-remainder: lc(d)^(deg n - deg d + 1) * n = q*d + r with deg r < deg d.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo_rem by zero");
        let dd = d.deg();
        let mut r = self.clone();
        if r.is_zero() || r.deg() < dd {
            return self.clone();
        }
        let lcd = d.leading_coeff();
        let mut k = r.deg() as isize - dd as isize + 1;
        while !r.is_zero() && r.deg() >= dd {
            let shift = r.deg() - dd;
            let lr = r.leading_coeff();
            // r <- lc(d)*r - lr * x^shift * d
            r = r.scale(&lcd).sub(&d.mul(&IntPoly::monomial(lr, shift)));
            k -= 1;
        }
        // multiply by remaining powers of lc(d) so the identity uses exponent delta+1
        let mut res = r;
        while k > 0 {
            res = res.scale(&lcd);
            k -= 1;
        }
        res
    }

    /// Exact division; panics if not exact (internal use on known-divisible inputs).
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = RatPoly::from(self.clone()).div_rem(&RatPoly::from(d.clone()));
        assert!(r.is_zero(), "div_exact: remainder nonzero");
        q.to_int_poly().expect("div_exact: quotient not integral")
    }

    /// True if d divides self exactly over Z.
    pub fn divides(d: &Self, n: &Self) -> bool {
        if d.is_zero() {
            return n.is_zero();
        }
        let (q, r) = RatPoly::from(n.clone()).div_rem(&RatPoly::from(d.clone()));
        r.is_zero() && q.to_int_poly().is_some()
    }

    /// Maximum absolute value of the coefficients.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Reverse the coefficients: x^deg * p(1/x).
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// Order of vanishing at x = 0.
    pub fn ord_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .unwrap_or(0)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        crate::ratpoly::format_poly(
            self.coeffs
                .iter()
                .map(|c| num_rational::BigRational::from(c.clone()))
                .collect::<Vec<_>>()
                .as_slice(),
            var,
        )
    }
}

impl From<&[i64]> for IntPoly {
    fn from(v: &[i64]) -> Self {
        IntPoly::from_i64(v)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", self.to_string_var("x"))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_var("x"))
    }
}
