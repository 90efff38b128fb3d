//! Irreducible factors of binomials 1 - q^a t^b.
//!
//! Writing m = p^g with p primitive, 1 - m = ∏_{d | g} F_{d,p} where
//! F_{1,p} = 1 - p and F_{d,p} = Φ_d(p) for d > 1. Each F_{d,p} is irreducible
//! in the Laurent ring (a unimodular change of variables sends p to a single
//! variable), so keeping denominators as products of these keys gives exact
//! coprimality tests by trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use super::laurent::{Coeff, Mono, QTLaurent};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CycloFactor {
    pub d: u32,
    /// Primitive monomial, positive in the monomial order.
    pub p: Mono,
}

/// Integer coefficients of the cyclotomic polynomial Φ_d, ascending.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Vec<i64>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(&d) {
        return v.clone();
    }
    let v = cyclotomic_uncached(d);
    cache.write().unwrap().insert(d, v.clone());
    v
}

fn cyclotomic_uncached(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // x^d - 1 divided by Φ_e for all proper divisors e.
    let mut num: Vec<i64> = vec![0; d as usize + 1];
    num[0] = -1;
    num[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            num = poly_div_exact(&num, &cyclotomic(e));
        }
    }
    num
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db];
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = r[i + db] / lb;
        q[i] = c;
        for j in 0..=db {
            r[i + j] -= c * b[j];
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

pub fn mobius(n: u32) -> i32 {
    let mut m = n;
    let mut res = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            res = -res;
        }
        p += 1;
    }
    if m > 1 {
        res = -res;
    }
    res
}

fn positive(m: Mono) -> bool {
    m > Mono::ONE
}

/// Decomposes 1 - m = sign * mono * ∏ factors. Requires m != 1.
pub fn decompose_one_minus(m: Mono) -> (i32, Mono, Vec<CycloFactor>) {
    assert!(!m.is_one(), "1 - 1 has no factorization");
    let (g, p) = if m.q2 % 2 == 0 && m.t2 % 2 == 0 {
        let (a, b) = (m.q2 / 2, m.t2 / 2);
        let g = a.gcd(&b);
        (g, Mono::new(a / g, b / g))
    } else {
        let g = m.q2.gcd(&m.t2);
        (g, Mono::doubled(m.q2 / g, m.t2 / g))
    };
    let (sign, mono, p) = if positive(p) { (1, Mono::ONE, p) } else { (-1, m, p.inv()) };
    let factors = (1..=g as u32)
        .filter(|d| (g as u32).is_multiple_of(*d))
        .map(|d| CycloFactor { d, p })
        .collect();
    (sign, mono, factors)
}

impl CycloFactor {
    pub fn poly(&self) -> QTLaurent {
        if self.d == 1 {
            return QTLaurent::one_minus(self.p);
        }
        QTLaurent::from_terms(
            cyclotomic(self.d)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (self.p.pow(i as i32), Coeff::from_integer(BigInt::from(c)))),
        )
    }

    pub fn total2_span(&self) -> i32 {
        self.p.total2().abs() * phi(self.d) as i32
    }

    /// Exact test for F | n. Restricts n to the torus coset on which F vanishes:
    /// with p = q^a t^b and a u + b v = 1, set q = s^b ζ^u, t = s^{-a} ζ^v where
    /// ζ is a primitive d-th root of unity; n vanishes there iff every s-bucket
    /// is divisible by Φ_d(ζ).
    pub fn divides(&self, n: &QTLaurent) -> bool {
        if n.is_zero() {
            return true;
        }
        let integral = self.p.is_integral() && n.is_integral();
        let (a, b) = if integral {
            (self.p.q2 as i64 / 2, self.p.t2 as i64 / 2)
        } else {
            (self.p.q2 as i64, self.p.t2 as i64)
        };
        let eg = a.extended_gcd(&b);
        if eg.gcd.abs() != 1 {
            // Half-lattice key against integral data (or vice versa) -- fall back.
            return n.exact_div(&self.poly()).is_some();
        }
        let (u, v) = if eg.gcd == 1 { (eg.x, eg.y) } else { (-eg.x, -eg.y) };
        let d = self.d as i64;
        let mut buckets: std::collections::BTreeMap<i64, Vec<Coeff>> = Default::default();
        for (m, c) in n.terms() {
            let (i, j) = if integral {
                (m.q2 as i64 / 2, m.t2 as i64 / 2)
            } else {
                (m.q2 as i64, m.t2 as i64)
            };
            let s = b * i - a * j;
            let z = (u * i + v * j).rem_euclid(d) as usize;
            let e = buckets.entry(s).or_insert_with(|| vec![Coeff::zero(); d as usize]);
            e[z] += c;
        }
        let phi_d = cyclotomic(self.d);
        let deg = phi_d.len() - 1;
        for (_, mut v) in buckets {
            // reduce v modulo the monic Φ_d
            for k in (deg..v.len()).rev() {
                if v[k].is_zero() {
                    continue;
                }
                let c = v[k].clone();
                for (j, pc) in phi_d.iter().enumerate() {
                    if *pc != 0 {
                        v[k - deg + j] -= &c * Coeff::from_integer(BigInt::from(*pc));
                    }
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        true
    }

    /// F_{d,p} = ∏_{e | d} (1 - p^e)^{μ(d/e)}.
    pub fn as_binomial_product(&self) -> Vec<(Mono, i32)> {
        (1..=self.d)
            .filter(|e| self.d.is_multiple_of(*e))
            .filter_map(|e| {
                let mu = mobius(self.d / e);
                if mu == 0 {
                    None
                } else {
                    Some((self.p.pow(e as i32), mu))
                }
            })
            .collect()
    }
}

pub fn phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// Value Φ_d(1) (with F_{1} = 1 - 1 = 0).
pub fn cyclo_at_one(d: u32) -> Coeff {
    if d == 1 {
        return Coeff::zero();
    }
    let s: i64 = cyclotomic(d).iter().sum();
    Coeff::from_integer(BigInt::from(s))
}

