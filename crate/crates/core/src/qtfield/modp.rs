//! Arithmetic modulo the Mersenne prime 2^61 − 1.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::laurent::Coeff;

pub const P: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64) -> u64 {
    (a + b) % P
}

pub fn sub(a: u64, b: u64) -> u64 {
    (a + P - b) % P
}

pub fn mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

pub fn from_i64(x: i64) -> u64 {
    x.rem_euclid(P as i64) as u64
}

pub fn red_int(x: &BigInt) -> u64 {
    let m = x % BigInt::from(P);
    let m = if m < BigInt::zero() { m + BigInt::from(P) } else { m };
    m.to_u64().unwrap()
}

/// Image of a rational, or None if the denominator vanishes mod P.
pub fn red(c: &Coeff) -> Option<u64> {
    let d = red_int(c.denom());
    if d == 0 {
        return None;
    }
    Some(mul(red_int(c.numer()), inv(d)))
}

/// Symmetric lift to (−P/2, P/2).
pub fn lift(x: u64) -> i64 {
    if x > P / 2 {
        -((P - x) as i64)
    } else {
        x as i64
    }
}

/// Lifted integer must be small enough that the residue is trustworthy.
pub fn lift_checked(x: u64, bound: i64) -> Option<i64> {
    let v = lift(x);
    (BigInt::from(v).abs() <= BigInt::from(bound)).then_some(v)
}
