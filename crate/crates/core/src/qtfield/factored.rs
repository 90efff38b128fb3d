use std::collections::BTreeMap;
use std::ops::{Div, Mul};

use num_traits::{One, Signed, Zero};

use super::cyclo::{decompose_one_minus, CycloFactor};
use super::laurent::{Coeff, Mono, QTLaurent};
use super::rational::QTRational;
use crate::error::{Error, Result};

/// A nonzero element c · m · ∏ F^e with F irreducible binomial factors and
/// e ∈ Z. Products of Ω-values, hook products and Garsia–Haiman ratios live
/// here without ever being expanded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factored {
    pub coef: Coeff,
    pub mono: Mono,
    pub factors: BTreeMap<CycloFactor, i32>,
}

impl Factored {
    pub fn one() -> Self {
        Factored { coef: Coeff::one(), mono: Mono::ONE, factors: BTreeMap::new() }
    }

    pub fn constant(c: Coeff) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Factored { coef: c, mono: Mono::ONE, factors: BTreeMap::new() })
    }

    pub fn monomial(m: Mono) -> Self {
        Factored { coef: Coeff::one(), mono: m, factors: BTreeMap::new() }
    }

    /// 1 - m; fails for m = 1.
    pub fn one_minus(m: Mono) -> Result<Self> {
        if m.is_one() {
            return Err(Error::DivisionByZero);
        }
        let (sign, mono, fs) = decompose_one_minus(m);
        let mut out = Factored::monomial(mono);
        if sign < 0 {
            out.coef = -out.coef;
        }
        for f in fs {
            *out.factors.entry(f).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// (1 - m)^e.
    pub fn one_minus_pow(m: Mono, e: i32) -> Result<Self> {
        Ok(Self::one_minus(m)?.pow(e))
    }

    pub fn mul_assign(&mut self, o: &Factored) {
        self.coef *= &o.coef;
        self.mono = self.mono.mul(o.mono);
        for (f, e) in &o.factors {
            let x = self.factors.entry(*f).or_insert(0);
            *x += e;
            if *x == 0 {
                self.factors.remove(f);
            }
        }
    }

    pub fn inv(&self) -> Self {
        Factored {
            coef: self.coef.recip(),
            mono: self.mono.inv(),
            factors: self.factors.iter().map(|(f, e)| (*f, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i32) -> Self {
        if k == 0 {
            return Self::one();
        }
        let c = if k > 0 {
            num_traits::pow(self.coef.clone(), k as usize)
        } else {
            num_traits::pow(self.coef.recip(), (-k) as usize)
        };
        Factored {
            coef: c,
            mono: self.mono.pow(k),
            factors: self.factors.iter().map(|(f, e)| (*f, e * k)).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut out = self.clone();
        out.coef *= c;
        Ok(out)
    }

    pub fn swap_qt(&self) -> Self {
        let mut out = Factored::constant(self.coef.clone()).unwrap();
        out.mono = self.mono.swap();
        for (f, e) in &self.factors {
            // F_{d,p}(t,q) = F_{d,swap p} up to orientation
            for (m, k) in f.as_binomial_product() {
                out.mul_assign(&Factored::one_minus(m.swap()).unwrap().pow(k * e));
            }
        }
        out
    }

    /// Multiplicity-wise negative part, as a map with positive exponents.
    pub fn denominator_factors(&self) -> BTreeMap<CycloFactor, u32> {
        self.factors.iter().filter(|(_, e)| **e < 0).map(|(f, e)| (*f, (-e) as u32)).collect()
    }

    /// coef · mono · ∏_{e>0} F^e, expanded.
    pub fn numerator_poly(&self) -> QTLaurent {
        let mut p = QTLaurent::term(self.mono, self.coef.clone());
        for (f, e) in &self.factors {
            if *e > 0 {
                p = mul_factor_pow(&p, f, *e as u32);
            }
        }
        p
    }

    pub fn is_polynomial_like(&self) -> bool {
        self.factors.values().all(|e| *e >= 0)
    }

    pub fn to_rational(&self) -> QTRational {
        let half_keys = self.factors.keys().any(|f| !f.p.is_integral());
        let r = QTRational::from_parts_unchecked(self.numerator_poly(), self.denominator_factors());
        if half_keys {
            r.renormalize()
        } else {
            r
        }
    }

    /// Leading sign of the coefficient (used for positivity diagnostics).
    pub fn coef_is_negative(&self) -> bool {
        self.coef.is_negative()
    }
}

/// p · F^e, using the single-merge path for binomials.
pub(crate) fn mul_factor_pow(p: &QTLaurent, f: &CycloFactor, e: u32) -> QTLaurent {
    let mut out = p.clone();
    if f.d == 1 {
        for _ in 0..e {
            out = out.mul_one_minus(f.p);
        }
    } else {
        let fp = f.poly();
        for _ in 0..e {
            out = &out * &fp;
        }
    }
    out
}

impl Mul for &Factored {
    type Output = Factored;
    fn mul(self, o: &Factored) -> Factored {
        let mut r = self.clone();
        r.mul_assign(o);
        r
    }
}

impl Div for &Factored {
    type Output = Factored;
    fn div(self, o: &Factored) -> Factored {
        let mut r = self.clone();
        r.mul_assign(&o.inv());
        r
    }
}

/// Sums c_i · F_i over a common binomial denominator and simplifies once.
pub fn sum_factored<'a, I: IntoIterator<Item = &'a Factored>>(terms: I) -> QTRational {
    let terms: Vec<&Factored> = terms.into_iter().collect();
    if terms.is_empty() {
        return QTRational::zero();
    }
    let mut lcm: BTreeMap<CycloFactor, u32> = BTreeMap::new();
    for t in &terms {
        for (f, e) in t.denominator_factors() {
            let x = lcm.entry(f).or_insert(0);
            *x = (*x).max(e);
        }
    }
    let mut num = QTLaurent::zero();
    for t in &terms {
        let mut p = QTLaurent::term(t.mono, t.coef.clone());
        for (f, e) in &t.factors {
            if *e > 0 {
                p = mul_factor_pow(&p, f, *e as u32);
            }
        }
        for (f, big) in &lcm {
            let have = t.factors.get(f).copied().unwrap_or(0);
            let missing = *big as i32 + have.min(0);
            if missing > 0 {
                p = mul_factor_pow(&p, f, missing as u32);
            }
        }
        num += &p;
    }
    QTRational::from_parts_unchecked(num, lcm).renormalize()
}
