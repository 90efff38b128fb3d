use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Coeff = BigRational;

/// A monomial q^{q2/2} t^{t2/2}. Exponents are stored doubled so that
/// half-integers are exact. The derived order is lexicographic (q first),
/// which is a group order on Z^2 and serves as the monomial order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono {
    pub q2: i32,
    pub t2: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q2: 0, t2: 0 };

    /// Integer exponents q^a t^b.
    pub fn new(a: i32, b: i32) -> Self {
        Mono { q2: 2 * a, t2: 2 * b }
    }

    pub fn doubled(q2: i32, t2: i32) -> Self {
        Mono { q2, t2 }
    }

    pub fn q() -> Self {
        Mono::new(1, 0)
    }

    pub fn t() -> Self {
        Mono::new(0, 1)
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono { q2: self.q2 + o.q2, t2: self.t2 + o.t2 }
    }

    pub fn div(self, o: Mono) -> Mono {
        Mono { q2: self.q2 - o.q2, t2: self.t2 - o.t2 }
    }

    pub fn inv(self) -> Mono {
        Mono { q2: -self.q2, t2: -self.t2 }
    }

    pub fn pow(self, k: i32) -> Mono {
        Mono { q2: self.q2 * k, t2: self.t2 * k }
    }

    pub fn is_one(self) -> bool {
        self.q2 == 0 && self.t2 == 0
    }

    pub fn is_integral(self) -> bool {
        self.q2 % 2 == 0 && self.t2 % 2 == 0
    }

    /// Twice the total degree.
    pub fn total2(self) -> i32 {
        self.q2 + self.t2
    }

    pub fn swap(self) -> Mono {
        Mono { q2: self.t2, t2: self.q2 }
    }
}

/// Sparse Laurent polynomial in q, t with rational coefficients.
/// Terms are sorted by `Mono` ascending and never hold a zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QTLaurent {
    terms: Vec<(Mono, Coeff)>,
}

fn merge(a: &[(Mono, Coeff)], b: &[(Mono, Coeff)], negate_b: bool) -> Vec<(Mono, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                let c = if negate_b { -b[j].1.clone() } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let c = if negate_b { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for (m, c) in &b[j..] {
        out.push((*m, if negate_b { -c.clone() } else { c.clone() }));
    }
    out
}

impl QTLaurent {
    pub fn zero() -> Self {
        QTLaurent { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Coeff::from_integer(BigInt::from(c)))
    }

    pub fn term(m: Mono, c: Coeff) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            QTLaurent { terms: vec![(m, c)] }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, Coeff::one())
    }

    pub fn q() -> Self {
        Self::mono(Mono::q())
    }

    pub fn t() -> Self {
        Self::mono(Mono::t())
    }

    /// 1 - m.
    pub fn one_minus(m: Mono) -> Self {
        Self::one() - Self::mono(m)
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, Coeff)>>(it: I) -> Self {
        let mut v: Vec<(Mono, Coeff)> = it.into_iter().collect();
        v.sort_by_key(|a| a.0);
        let mut out: Vec<(Mono, Coeff)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 += c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|x| !x.1.is_zero());
        QTLaurent { terms: out }
    }

    /// Integer-exponent, integer-coefficient convenience constructor.
    pub fn from_int_terms(ts: &[(i32, i32, i64)]) -> Self {
        Self::from_terms(
            ts.iter()
                .map(|&(a, b, c)| (Mono::new(a, b), Coeff::from_integer(BigInt::from(c)))),
        )
    }

    pub fn terms(&self) -> &[(Mono, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, m: Mono) -> Coeff {
        match self.terms.binary_search_by(|x| x.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Coeff::zero(),
        }
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff(Mono::ONE)
    }

    pub fn leading(&self) -> Option<&(Mono, Coeff)> {
        self.terms.last()
    }

    pub fn trailing(&self) -> Option<&(Mono, Coeff)> {
        self.terms.first()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTLaurent { terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect() }
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&Coeff::from_integer(BigInt::from(c)))
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        QTLaurent { terms: self.terms.iter().map(|(x, c)| (x.mul(m), c.clone())).collect() }
    }

    /// self * (1 - m), computed by a single merge.
    pub fn mul_one_minus(&self, m: Mono) -> Self {
        let shifted = self.mul_mono(m);
        QTLaurent { terms: merge(&self.terms, &shifted.terms, true) }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent (the monomial content), or ONE for zero.
    pub fn content(&self) -> Mono {
        if self.terms.is_empty() {
            return Mono::ONE;
        }
        let mq = self.terms.iter().map(|(m, _)| m.q2).min().unwrap();
        let mt = self.terms.iter().map(|(m, _)| m.t2).min().unwrap();
        Mono { q2: mq, t2: mt }
    }

    pub fn max_exponents(&self) -> Mono {
        if self.terms.is_empty() {
            return Mono::ONE;
        }
        let mq = self.terms.iter().map(|(m, _)| m.q2).max().unwrap();
        let mt = self.terms.iter().map(|(m, _)| m.t2).max().unwrap();
        Mono { q2: mq, t2: mt }
    }

    /// Twice the smallest total degree present.
    pub fn min_total2(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.total2()).min()
    }

    pub fn max_total2(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.total2()).max()
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q2 >= 0 && m.t2 >= 0)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_integral())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    pub fn has_nonneg_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer() && !c.is_negative())
    }

    pub fn only_t(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.q2 == 0)
    }

    pub fn only_q(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.t2 == 0)
    }

    /// Keeps terms of total degree at most bound2/2.
    pub fn truncate2(&self, bound2: i64) -> Self {
        QTLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| (m.total2() as i64) <= bound2)
                .cloned()
                .collect(),
        }
    }

    /// Applies an exponent map; colliding images are summed.
    pub fn map_monos<F: Fn(Mono) -> Mono>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())))
    }

    pub fn swap_qt(&self) -> Self {
        self.map_monos(Mono::swap)
    }

    /// Substitutes q ↦ qimg, t ↦ timg (monomials).
    pub fn subst_mono(&self, qimg: Mono, timg: Mono) -> Result<Self> {
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let q4 = m.q2 as i64 * qimg.q2 as i64 + m.t2 as i64 * timg.q2 as i64;
            let t4 = m.q2 as i64 * qimg.t2 as i64 + m.t2 as i64 * timg.t2 as i64;
            if q4 % 2 != 0 || t4 % 2 != 0 {
                return Err(Error::Domain("substitution produces quarter-integer exponent".into()));
            }
            out.push((Mono::doubled((q4 / 2) as i32, (t4 / 2) as i32), c.clone()));
        }
        Ok(Self::from_terms(out))
    }

    /// Evaluates at rational q, t; half-integer exponents are rejected.
    pub fn eval(&self, q: &Coeff, t: &Coeff) -> Result<Coeff> {
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            if !m.is_integral() {
                return Err(Error::Domain("cannot evaluate half-integer power".into()));
            }
            acc += c * rat_pow(q, m.q2 / 2)? * rat_pow(t, m.t2 / 2)?;
        }
        Ok(acc)
    }

    /// Sum of coefficients, i.e. the value at q = t = 1.
    pub fn coeff_sum(&self) -> Coeff {
        self.terms.iter().fold(Coeff::zero(), |a, (_, c)| a + c)
    }

    /// Exact quotient self / d, or None if d does not divide self.
    pub fn exact_div(&self, d: &QTLaurent) -> Option<QTLaurent> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.terms.len() == 1 {
            let (dm, dc) = &d.terms[0];
            let inv = dc.recip();
            return Some(QTLaurent {
                terms: self.terms.iter().map(|(m, c)| (m.div(*dm), c * &inv)).collect(),
            });
        }
        // Newton polytope of the quotient lies in this box.
        let (nlo, nhi) = (self.content(), self.max_exponents());
        let (dlo, dhi) = (d.content(), d.max_exponents());
        let (qlo, qhi) = (nlo.q2 - dlo.q2, nhi.q2 - dhi.q2);
        let (tlo, thi) = (nlo.t2 - dlo.t2, nhi.t2 - dhi.t2);
        if qlo > qhi || tlo > thi {
            return None;
        }
        let (lm, lc) = d.terms.last().unwrap().clone();
        let lc_inv = lc.recip();
        let mut rem: BTreeMap<Mono, Coeff> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, Coeff)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            let qm = m.div(lm);
            if qm.q2 < qlo || qm.q2 > qhi || qm.t2 < tlo || qm.t2 > thi {
                return None;
            }
            let qc = c * &lc_inv;
            for (dm, dc) in &d.terms {
                let key = dm.mul(qm);
                let delta = dc * &qc;
                match rem.get_mut(&key) {
                    Some(v) => {
                        *v -= delta;
                        if v.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        quot.reverse();
        Some(QTLaurent { terms: quot })
    }

    pub fn to_json_terms(&self) -> Vec<crate::qtfield::json::TermJson> {
        crate::qtfield::json::laurent_to_json(self)
    }
}

pub(crate) fn rat_pow(x: &Coeff, e: i32) -> Result<Coeff> {
    if e >= 0 {
        Ok(num_traits::pow(x.clone(), e as usize))
    } else if x.is_zero() {
        Err(Error::DivisionByZero)
    } else {
        Ok(num_traits::pow(x.recip(), (-e) as usize))
    }
}

fn mul_terms(a: &[(Mono, Coeff)], b: &[(Mono, Coeff)]) -> Vec<(Mono, Coeff)> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let (small, big) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    if small.len() <= 4 {
        let mut acc: Vec<(Mono, Coeff)> = Vec::new();
        for (sm, sc) in small {
            let row: Vec<(Mono, Coeff)> = big.iter().map(|(m, c)| (m.mul(*sm), c * sc)).collect();
            acc = merge(&acc, &row, false);
        }
        return acc;
    }
    let mut map: HashMap<Mono, Coeff> = HashMap::with_capacity(big.len() * 2);
    for (sm, sc) in small {
        for (m, c) in big {
            let key = m.mul(*sm);
            let v = c * sc;
            match map.get_mut(&key) {
                Some(x) => *x += v,
                None => {
                    map.insert(key, v);
                }
            }
        }
    }
    let mut out: Vec<(Mono, Coeff)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    out.sort_by_key(|x| x.0);
    out
}

impl<'a> Add<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn add(self, o: &QTLaurent) -> QTLaurent {
        QTLaurent { terms: merge(&self.terms, &o.terms, false) }
    }
}

impl<'a> Sub<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn sub(self, o: &QTLaurent) -> QTLaurent {
        QTLaurent { terms: merge(&self.terms, &o.terms, true) }
    }
}

impl<'a> Mul<&'a QTLaurent> for &'a QTLaurent {
    type Output = QTLaurent;
    fn mul(self, o: &QTLaurent) -> QTLaurent {
        QTLaurent { terms: mul_terms(&self.terms, &o.terms) }
    }
}

impl Add for QTLaurent {
    type Output = QTLaurent;
    fn add(self, o: QTLaurent) -> QTLaurent {
        &self + &o
    }
}

impl Sub for QTLaurent {
    type Output = QTLaurent;
    fn sub(self, o: QTLaurent) -> QTLaurent {
        &self - &o
    }
}

impl Mul for QTLaurent {
    type Output = QTLaurent;
    fn mul(self, o: QTLaurent) -> QTLaurent {
        &self * &o
    }
}

impl AddAssign<&QTLaurent> for QTLaurent {
    fn add_assign(&mut self, o: &QTLaurent) {
        self.terms = merge(&self.terms, &o.terms, false);
    }
}

impl SubAssign<&QTLaurent> for QTLaurent {
    fn sub_assign(&mut self, o: &QTLaurent) {
        self.terms = merge(&self.terms, &o.terms, true);
    }
}

impl Neg for QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        QTLaurent { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Neg for &QTLaurent {
    type Output = QTLaurent;
    fn neg(self) -> QTLaurent {
        self.clone().neg()
    }
}

pub(crate) fn fmt_exp(x2: i32) -> String {
    if x2 % 2 == 0 {
        (x2 / 2).to_string()
    } else {
        format!("{}/2", x2)
    }
}

impl fmt::Display for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                parts.push(a.to_string());
            }
            for (name, e) in [("q", m.q2), ("t", m.t2)] {
                if e == 0 {
                    continue;
                }
                if e == 2 {
                    parts.push(name.to_string());
                } else if e % 2 == 0 && e > 0 {
                    parts.push(format!("{}^{}", name, e / 2));
                } else {
                    parts.push(format!("{}^({})", name, fmt_exp(e)));
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for QTLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
