use std::fmt;

use super::laurent::{Coeff, Mono, QTLaurent};
use super::rational::QTRational;
use crate::error::{Error, Result};

/// A (q,t)-series certified through total degree `bound`.
#[derive(Clone, PartialEq, Eq)]
pub struct QTSeries {
    poly: QTLaurent,
    bound: i64,
}

impl QTSeries {
    pub fn new(poly: QTLaurent, bound: i64) -> Self {
        QTSeries { poly: poly.truncate2(2 * bound), bound }
    }

    pub fn zero(bound: i64) -> Self {
        QTSeries { poly: QTLaurent::zero(), bound }
    }

    pub fn one(bound: i64) -> Self {
        Self::new(QTLaurent::one(), bound)
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn poly(&self) -> &QTLaurent {
        &self.poly
    }

    pub fn coeff(&self, m: Mono) -> Coeff {
        self.poly.coeff(m)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    fn low2(&self) -> i64 {
        self.poly.min_total2().map(|x| x as i64).unwrap_or(0).min(0)
    }

    pub fn add(&self, o: &QTSeries) -> QTSeries {
        let b = self.bound.min(o.bound);
        Self::new(&self.poly + &o.poly, b)
    }

    pub fn sub(&self, o: &QTSeries) -> QTSeries {
        let b = self.bound.min(o.bound);
        Self::new(&self.poly - &o.poly, b)
    }

    pub fn mul(&self, o: &QTSeries) -> QTSeries {
        // a negative-degree factor lowers the certified range of the other
        let b2 = (2 * self.bound + o.low2()).min(2 * o.bound + self.low2());
        let b = b2.div_euclid(2);
        let a = self.poly.truncate2(2 * b - o.low2());
        let c = o.poly.truncate2(2 * b - self.low2());
        Self::new(&a * &c, b)
    }

    pub fn scale(&self, c: &Coeff) -> QTSeries {
        QTSeries { poly: self.poly.scale(c), bound: self.bound }
    }

    pub fn mul_laurent(&self, p: &QTLaurent) -> QTSeries {
        self.mul(&QTSeries::new(p.clone(), self.bound))
    }
}

/// Taylor expansion through total degree `bound`. The lowest-degree part of
/// the denominator must be a single monomial c·M; then
/// 1/den = (cM)^{-1} Σ_k (-U)^k with U = den/(cM) - 1 of positive degree.
pub fn series_expand(r: &QTRational, bound: i64) -> Result<QTSeries> {
    let b2 = 2 * bound;
    if r.is_zero() {
        return Ok(QTSeries::zero(bound));
    }
    let num = r.numerator_raw();
    let den = r.denominator_expanded();
    let lo = den.min_total2().unwrap();
    let low: Vec<&(Mono, Coeff)> = den.terms().iter().filter(|(m, _)| m.total2() == lo).collect();
    if low.len() != 1 {
        let mut culprit = String::new();
        for f in r.denominator_factors().keys() {
            let p = f.poly();
            let l = p.min_total2().unwrap();
            if p.terms().iter().filter(|(m, _)| m.total2() == l).count() > 1 {
                culprit = p.to_string();
                break;
            }
        }
        if culprit.is_empty() {
            culprit = den.to_string();
        }
        return Err(Error::Domain(format!(
            "cannot expand: lowest-degree part of denominator factor {} is not a monomial",
            culprit
        )));
    }
    let (m, c) = low[0].clone();
    let cinv = c.recip();
    let u = &den.mul_mono(m.inv()).scale(&cinv) - &QTLaurent::one();
    let neg_u = -u;
    let x = num.mul_mono(m.inv()).scale(&cinv);
    let mut term = x.truncate2(b2);
    let mut acc = term.clone();
    while !term.is_zero() {
        term = (&term * &neg_u).truncate2(b2);
        acc += &term;
    }
    Ok(QTSeries::new(acc, bound))
}

impl fmt::Display for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(deg {})", self.poly, self.bound + 1)
    }
}

impl fmt::Debug for QTSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

