use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::cyclo::{cyclo_at_one, CycloFactor};
use super::factored::{mul_factor_pow, Factored};
use super::gcd::{normalize_poly, poly_gcd};
use super::laurent::{Coeff, Mono, QTLaurent};
use crate::error::{Error, Result};

/// An element of Q(q^{1/2}, t^{1/2}) in lowest terms.
///
/// The denominator is kept as ∏ F^e · rest, where the F are irreducible
/// binomial factors and `rest` is a polynomial without monomial content and
/// with leading coefficient 1. The numerator is coprime to every F present
/// and to `rest`.
#[derive(Clone)]
pub struct QTRational {
    num: QTLaurent,
    cyclo: BTreeMap<CycloFactor, u32>,
    rest: QTLaurent,
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: QTLaurent::zero(), cyclo: BTreeMap::new(), rest: QTLaurent::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(QTLaurent::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_laurent(QTLaurent::from_int(c))
    }

    pub fn constant(c: Coeff) -> Self {
        Self::from_laurent(QTLaurent::constant(c))
    }

    pub fn mono(m: Mono) -> Self {
        Self::from_laurent(QTLaurent::mono(m))
    }

    pub fn from_laurent(p: QTLaurent) -> Self {
        QTRational { num: p, cyclo: BTreeMap::new(), rest: QTLaurent::one() }
    }

    pub(crate) fn from_parts_unchecked(num: QTLaurent, cyclo: BTreeMap<CycloFactor, u32>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        QTRational { num, cyclo, rest: QTLaurent::one() }
    }

    /// num / den for arbitrary Laurent polynomials.
    pub fn from_num_den(num: QTLaurent, den: QTLaurent) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let c = den.content();
        let lc = den.leading().unwrap().1.clone();
        let rest = normalize_poly(&den);
        let num = num.mul_mono(c.inv()).scale(&lc.recip());
        Ok(QTRational { num, cyclo: BTreeMap::new(), rest }.renormalize())
    }

    /// Cancels common factors. Cheap when the numerator is already coprime.
    pub(crate) fn renormalize(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        let keys: Vec<CycloFactor> = self.cyclo.keys().copied().collect();
        for f in keys {
            let mut e = self.cyclo[&f];
            while e > 0 && f.divides(&self.num) {
                self.num = self
                    .num
                    .exact_div(&f.poly())
                    .expect("divisibility test and exact division disagree");
                e -= 1;
            }
            if e == 0 {
                self.cyclo.remove(&f);
            } else {
                self.cyclo.insert(f, e);
            }
        }
        if !self.rest.is_one() {
            loop {
                let g = poly_gcd(&self.num, &self.rest);
                if g.is_constant() {
                    break;
                }
                self.num = self.num.exact_div(&g).expect("gcd must divide numerator");
                let r = self.rest.exact_div(&g).expect("gcd must divide denominator");
                let lc = r.leading().unwrap().1.clone();
                self.num = self.num.scale(&lc.recip());
                self.rest = r.scale(&lc.recip());
            }
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.is_laurent() && self.num.is_one()
    }

    /// True if the denominator is trivial.
    pub fn is_laurent(&self) -> bool {
        self.cyclo.is_empty() && self.rest.is_one()
    }

    pub fn as_laurent(&self) -> Option<&QTLaurent> {
        if self.is_laurent() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn to_laurent(&self) -> Result<QTLaurent> {
        self.as_laurent()
            .cloned()
            .ok_or_else(|| Error::Domain(format!("not a Laurent polynomial: {}", self)))
    }

    pub fn numerator_raw(&self) -> &QTLaurent {
        &self.num
    }

    pub fn denominator_factors(&self) -> &BTreeMap<CycloFactor, u32> {
        &self.cyclo
    }

    fn den_times(&self, p: &QTLaurent) -> QTLaurent {
        let mut out = p.clone();
        for (f, e) in &self.cyclo {
            out = mul_factor_pow(&out, f, *e);
        }
        if !self.rest.is_one() {
            out = &out * &self.rest;
        }
        out
    }

    pub fn denominator_expanded(&self) -> QTLaurent {
        self.den_times(&QTLaurent::one())
    }

    /// Canonical (numerator, denominator): denominator has no monomial
    /// content and leading coefficient 1.
    pub fn canonical_parts(&self) -> (QTLaurent, QTLaurent) {
        if self.is_zero() {
            return (QTLaurent::zero(), QTLaurent::one());
        }
        let den = self.denominator_expanded();
        let lc = den.leading().unwrap().1.clone();
        (self.num.scale(&lc.recip()), den.scale(&lc.recip()))
    }

    fn lcm_den(
        a: &QTRational,
        b: &QTRational,
    ) -> (BTreeMap<CycloFactor, u32>, QTLaurent, QTLaurent, QTLaurent) {
        let mut l = a.cyclo.clone();
        for (f, e) in &b.cyclo {
            let x = l.entry(*f).or_insert(0);
            *x = (*x).max(*e);
        }
        let (rest, ma, mb) = if a.rest == b.rest {
            (a.rest.clone(), QTLaurent::one(), QTLaurent::one())
        } else if a.rest.is_one() {
            (b.rest.clone(), b.rest.clone(), QTLaurent::one())
        } else if b.rest.is_one() {
            (a.rest.clone(), QTLaurent::one(), a.rest.clone())
        } else {
            let g = poly_gcd(&a.rest, &b.rest);
            let bg = b.rest.exact_div(&g).unwrap();
            let ag = a.rest.exact_div(&g).unwrap();
            (&a.rest * &bg, bg, ag)
        };
        (l, rest, ma, mb)
    }

    fn lift(&self, l: &BTreeMap<CycloFactor, u32>, m: &QTLaurent) -> QTLaurent {
        let mut p = if m.is_one() { self.num.clone() } else { &self.num * m };
        for (f, e) in l {
            let have = self.cyclo.get(f).copied().unwrap_or(0);
            if *e > have {
                p = mul_factor_pow(&p, f, e - have);
            }
        }
        p
    }

    pub fn add_ref(&self, o: &QTRational) -> QTRational {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.cyclo == o.cyclo && self.rest == o.rest {
            return QTRational { num: &self.num + &o.num, cyclo: self.cyclo.clone(), rest: self.rest.clone() }
                .renormalize();
        }
        let (l, rest, ma, mb) = Self::lcm_den(self, o);
        let num = &self.lift(&l, &ma) + &o.lift(&l, &mb);
        QTRational { num, cyclo: l, rest }.renormalize()
    }

    pub fn mul_ref(&self, o: &QTRational) -> QTRational {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut cyclo = self.cyclo.clone();
        for (f, e) in &o.cyclo {
            *cyclo.entry(*f).or_insert(0) += e;
        }
        let rest = if o.rest.is_one() {
            self.rest.clone()
        } else if self.rest.is_one() {
            o.rest.clone()
        } else {
            &self.rest * &o.rest
        };
        QTRational { num: &self.num * &o.num, cyclo, rest }.renormalize()
    }

    pub fn mul_laurent(&self, p: &QTLaurent) -> QTRational {
        QTRational { num: &self.num * p, cyclo: self.cyclo.clone(), rest: self.rest.clone() }
            .renormalize()
    }

    pub fn mul_factored(&self, f: &Factored) -> QTRational {
        self.mul_ref(&f.to_rational())
    }

    pub fn scale(&self, c: &Coeff) -> QTRational {
        if c.is_zero() {
            return Self::zero();
        }
        QTRational { num: self.num.scale(c), cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }

    pub fn mul_mono(&self, m: Mono) -> QTRational {
        QTRational { num: self.num.mul_mono(m), cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }

    pub fn inv(&self) -> Result<QTRational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // numerator and denominator are already coprime
        let den = self.denominator_expanded();
        let c = self.num.content();
        let lc = self.num.leading().unwrap().1.clone();
        Ok(QTRational {
            num: den.mul_mono(c.inv()).scale(&lc.recip()),
            cyclo: BTreeMap::new(),
            rest: normalize_poly(&self.num),
        })
    }

    pub fn div_ref(&self, o: &QTRational) -> Result<QTRational> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<QTRational> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        Ok(acc)
    }

    /// Sum over a common denominator, simplified once at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a QTRational>>(items: I) -> QTRational {
        let items: Vec<&QTRational> = items.into_iter().filter(|x| !x.is_zero()).collect();
        if items.is_empty() {
            return Self::zero();
        }
        if items.iter().any(|x| !x.rest.is_one()) {
            return items.iter().fold(Self::zero(), |a, b| a.add_ref(b));
        }
        let mut l: BTreeMap<CycloFactor, u32> = BTreeMap::new();
        for x in &items {
            for (f, e) in &x.cyclo {
                let y = l.entry(*f).or_insert(0);
                *y = (*y).max(*e);
            }
        }
        let one = QTLaurent::one();
        let mut num = QTLaurent::zero();
        for x in &items {
            num += &x.lift(&l, &one);
        }
        QTRational { num, cyclo: l, rest: QTLaurent::one() }.renormalize()
    }

    pub fn swap_qt(&self) -> QTRational {
        let mut out = QTRational::from_laurent(self.num.swap_qt());
        for (f, e) in &self.cyclo {
            let mut fac = Factored::one();
            for (m, k) in f.as_binomial_product() {
                fac.mul_assign(&Factored::one_minus(m.swap()).unwrap().pow(k));
            }
            out = out.mul_ref(&fac.pow(-(*e as i32)).to_rational());
        }
        if !self.rest.is_one() {
            out = out.div_ref(&QTRational::from_laurent(self.rest.swap_qt())).unwrap();
        }
        out
    }

    /// Substitutes q ↦ qimg, t ↦ timg (monomials).
    pub fn subst_mono(&self, qimg: Mono, timg: Mono) -> Result<QTRational> {
        let mut out = QTRational::from_laurent(self.num.subst_mono(qimg, timg)?);
        for (f, e) in &self.cyclo {
            let pimg = QTLaurent::mono(f.p).subst_mono(qimg, timg)?.terms()[0].0;
            let val = if pimg.is_one() {
                let c = cyclo_at_one(f.d);
                if c.is_zero() {
                    return Err(Error::Pole(format!("factor {} vanishes", f.poly())));
                }
                QTRational::constant(c)
            } else {
                let mut fac = Factored::one();
                for (m, k) in f.as_binomial_product() {
                    let mi = QTLaurent::mono(m).subst_mono(qimg, timg)?.terms()[0].0;
                    fac.mul_assign(&Factored::one_minus(mi)?.pow(k));
                }
                fac.to_rational()
            };
            out = out.div_ref(&val.pow(*e as i32)?)?;
        }
        if !self.rest.is_one() {
            let r = self.rest.subst_mono(qimg, timg)?;
            if r.is_zero() {
                return Err(Error::Pole("denominator vanishes under substitution".into()));
            }
            out = out.div_ref(&QTRational::from_laurent(r))?;
        }
        Ok(out)
    }

    /// General substitution q ↦ f, t ↦ g; integer exponents only unless the
    /// images are monomials.
    pub fn substitute(&self, f: &QTRational, g: &QTRational) -> Result<QTRational> {
        if let (Some(fm), Some(gm)) = (f.as_monomial(), g.as_monomial()) {
            if fm.1.is_one() && gm.1.is_one() {
                return self.subst_mono(fm.0, gm.0);
            }
        }
        let eval = |p: &QTLaurent| -> Result<QTRational> {
            let mut acc = QTRational::zero();
            for (m, c) in p.terms() {
                if !m.is_integral() {
                    return Err(Error::Domain("half-integer power under non-monomial substitution".into()));
                }
                let term = f.pow(m.q2 / 2)?.mul_ref(&g.pow(m.t2 / 2)?).scale(c);
                acc = acc.add_ref(&term);
            }
            Ok(acc)
        };
        let n = eval(&self.num)?;
        let d = eval(&self.denominator_expanded())?;
        if d.is_zero() {
            return Err(Error::Pole("denominator vanishes under substitution".into()));
        }
        n.div_ref(&d)
    }

    fn as_monomial(&self) -> Option<(Mono, Coeff)> {
        if self.is_laurent() && self.num.is_monomial() {
            Some(self.num.terms()[0].clone())
        } else {
            None
        }
    }

    /// Evaluates at rational q, t.
    pub fn specialize(&self, q: &Coeff, t: &Coeff) -> Result<Coeff> {
        let d = self.denominator_expanded().eval(q, t)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at q={}, t={}", q, t)));
        }
        Ok(self.num.eval(q, t)? / d)
    }

    pub fn series_expand(&self, bound: i64) -> Result<super::series::QTSeries> {
        super::series::series_expand(self, bound)
    }
}

impl PartialEq for QTRational {
    fn eq(&self, o: &QTRational) -> bool {
        if self.cyclo == o.cyclo && self.rest == o.rest {
            return self.num == o.num;
        }
        if self.is_zero() || o.is_zero() {
            return self.is_zero() && o.is_zero();
        }
        let (l, _, ma, mb) = Self::lcm_den(self, o);
        self.lift(&l, &ma) == o.lift(&l, &mb)
    }
}

impl Eq for QTRational {}

impl From<QTLaurent> for QTRational {
    fn from(p: QTLaurent) -> Self {
        QTRational::from_laurent(p)
    }
}

impl From<&Factored> for QTRational {
    fn from(f: &Factored) -> Self {
        f.to_rational()
    }
}

impl<'a> Add<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn add(self, o: &QTRational) -> QTRational {
        self.add_ref(o)
    }
}

impl<'a> Sub<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn sub(self, o: &QTRational) -> QTRational {
        self.add_ref(&-o)
    }
}

impl<'a> Mul<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    fn mul(self, o: &QTRational) -> QTRational {
        self.mul_ref(o)
    }
}

impl<'a> Div<&'a QTRational> for &'a QTRational {
    type Output = QTRational;
    /// Panics on division by zero; use `div_ref` for a checked version.
    fn div(self, o: &QTRational) -> QTRational {
        self.div_ref(o).expect("division by zero")
    }
}

impl Add for QTRational {
    type Output = QTRational;
    fn add(self, o: QTRational) -> QTRational {
        self.add_ref(&o)
    }
}

impl Sub for QTRational {
    type Output = QTRational;
    fn sub(self, o: QTRational) -> QTRational {
        &self - &o
    }
}

impl Mul for QTRational {
    type Output = QTRational;
    fn mul(self, o: QTRational) -> QTRational {
        self.mul_ref(&o)
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, cyclo: self.cyclo.clone(), rest: self.rest.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_laurent() {
            return write!(f, "{}", self.num);
        }
        let (n, d) = self.canonical_parts();
        write!(f, "({})/({})", n, d)
    }
}

impl fmt::Debug for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

