use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Full Kronecker symbol (a | n), defined for all integers, extending the
/// Jacobi symbol by (a | 2) in {0, +1, -1} (0 for even a, +1 for a = +-1 mod 8,
/// -1 for a = +-3 mod 8), (a | -1) = sign-dependent, and (a | 0) = [|a| = 1].
pub fn kronecker(a: &BigInt, n: &BigInt) -> i32 {
    if n.is_zero() {
        return if a.abs().is_one() { 1 } else { 0 };
    }
    let mut a = a.clone();
    let mut n = n.clone();
    let mut result = 1i32;
    if n.is_negative() {
        n = -n;
        if a.is_negative() {
            result = -result;
        }
    }
    // Strip factors of 2 from n.
    let two = BigInt::from(2);
    let mut e2 = 0u32;
    while n.is_even() {
        n /= &two;
        e2 += 1;
    }
    if e2 > 0 {
        if a.is_even() {
            return 0;
        }
        if e2 % 2 == 1 {
            let m8 = a.mod_floor(&BigInt::from(8));
            if m8 == BigInt::from(3) || m8 == BigInt::from(5) {
                result = -result;
            }
        }
    }
    if n.is_one() {
        return result;
    }
    // Jacobi symbol for odd n > 1 by quadratic reciprocity.
    a = a.mod_floor(&n);
    let three = BigInt::from(3);
    let four = BigInt::from(4);
    let five = BigInt::from(5);
    let eight = BigInt::from(8);
    while !a.is_zero() {
        while a.is_even() {
            a /= &two;
            let m8 = n.mod_floor(&eight);
            if m8 == three || m8 == five {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a.mod_floor(&four) == three && n.mod_floor(&four) == three {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

/// Convenience wrapper for machine integers.
pub fn kronecker_i64(a: i64, n: i64) -> i32 {
    kronecker(&BigInt::from(a), &BigInt::from(n))
}
