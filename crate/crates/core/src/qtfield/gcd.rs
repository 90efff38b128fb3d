//! Polynomial GCD over Q[q,t] by recursive primitive remainder sequences.
//! Only used for denominator parts that are not products of binomial factors.

use num_traits::{One, Zero};

use super::laurent::{Coeff, Mono, QTLaurent};

/// Dense univariate polynomial over Q, ascending coefficients, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct UPoly(pub Vec<Coeff>);

impl UPoly {
    fn trim(mut self) -> Self {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
        self
    }
    fn zero() -> Self {
        UPoly(Vec::new())
    }
    fn one() -> Self {
        UPoly(vec![Coeff::one()])
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn deg(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
    fn lc(&self) -> &Coeff {
        self.0.last().unwrap()
    }
    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let mut v = vec![Coeff::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in o.0.iter().enumerate() {
            v[i] -= c;
        }
        UPoly(v).trim()
    }
    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut v = vec![Coeff::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UPoly(v).trim()
    }
    fn scale(&self, c: &Coeff) -> UPoly {
        UPoly(self.0.iter().map(|x| x * c).collect()).trim()
    }
    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let mut r = self.0.clone();
        if self.0.len() < d.0.len() {
            return (UPoly::zero(), self.clone());
        }
        let dd = d.deg();
        let inv = d.lc().recip();
        let mut q = vec![Coeff::zero(); self.0.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] * &inv;
            if !c.is_zero() {
                for (j, b) in d.0.iter().enumerate() {
                    r[i + j] -= &c * b;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        (UPoly(q).trim(), UPoly(r).trim())
    }
    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lc().recip())
    }
    fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }
    fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero());
        q
    }
}

/// Polynomial in T with coefficients in Q[X].
type BPoly = Vec<UPoly>;

fn bp_trim(mut p: BPoly) -> BPoly {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
    p
}

fn bp_content(p: &BPoly) -> UPoly {
    let mut g = UPoly::zero();
    for c in p {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c.monic() } else { g.gcd(c) };
        if g.deg() == 0 {
            return UPoly::one();
        }
    }
    g
}

fn bp_div_scalar(p: &BPoly, c: &UPoly) -> BPoly {
    p.iter().map(|x| if x.is_zero() { UPoly::zero() } else { x.exact_div(c) }).collect()
}

fn bp_prem(a: &BPoly, b: &BPoly) -> BPoly {
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lcr = r[dr].clone();
        let k = dr - db;
        let mut nr: BPoly = r.iter().map(|c| c.mul(lcb)).collect();
        for (j, bc) in b.iter().enumerate() {
            nr[j + k] = nr[j + k].sub(&bc.mul(&lcr));
        }
        r = bp_trim(nr);
    }
    r
}

/// Scaling factor s so that exponents are multiples of s (1 or 2 in doubled units).
fn to_bpoly(p: &QTLaurent, step: i32) -> BPoly {
    let c = p.content();
    let mut out: BPoly = Vec::new();
    for (m, coeff) in p.terms() {
        let x = ((m.q2 - c.q2) / step) as usize;
        let t = ((m.t2 - c.t2) / step) as usize;
        if out.len() <= t {
            out.resize(t + 1, UPoly::zero());
        }
        let u = &mut out[t].0;
        if u.len() <= x {
            u.resize(x + 1, Coeff::zero());
        }
        u[x] += coeff;
    }
    out.into_iter().map(|u| u.trim()).collect()
}

fn from_bpoly(p: &BPoly, step: i32) -> QTLaurent {
    let mut terms = Vec::new();
    for (t, u) in p.iter().enumerate() {
        for (x, c) in u.0.iter().enumerate() {
            if !c.is_zero() {
                terms.push((Mono::doubled(x as i32 * step, t as i32 * step), c.clone()));
            }
        }
    }
    QTLaurent::from_terms(terms)
}

/// GCD of two Laurent polynomials (monomial content ignored), normalized to
/// have leading coefficient 1 in the monomial order and no monomial content.
pub fn poly_gcd(a: &QTLaurent, b: &QTLaurent) -> QTLaurent {
    if a.is_zero() {
        return normalize_poly(b);
    }
    if b.is_zero() {
        return normalize_poly(a);
    }
    let even = |p: &QTLaurent| {
        let c = p.content();
        p.terms().iter().all(|(m, _)| (m.q2 - c.q2) % 2 == 0 && (m.t2 - c.t2) % 2 == 0)
    };
    let step = if even(a) && even(b) { 2 } else { 1 };
    let (pa, pb) = (to_bpoly(a, step), to_bpoly(b, step));
    if modp::certainly_coprime(&pa, &pb) {
        return QTLaurent::one();
    }
    let (ca, cb) = (bp_content(&pa), bp_content(&pb));
    let cg = ca.gcd(&cb);
    let mut x = bp_div_scalar(&pa, &ca);
    let mut y = bp_div_scalar(&pb, &cb);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while y.len() > 1 {
        let r = bp_prem(&x, &y);
        x = y;
        if r.is_empty() {
            y = Vec::new();
            break;
        }
        let cr = bp_content(&r);
        y = bp_div_scalar(&r, &cr);
    }
    let g = if y.is_empty() {
        x
    } else {
        // y is a nonzero element of Q[X]: the primitive gcd is trivial
        vec![UPoly::one()]
    };
    let g: BPoly = g.iter().map(|c| c.mul(&cg)).collect();
    normalize_poly(&from_bpoly(&bp_trim(g), step))
}

/// Removes monomial content and scales to leading coefficient 1.
pub fn normalize_poly(p: &QTLaurent) -> QTLaurent {
    if p.is_zero() {
        return p.clone();
    }
    let c = p.content();
    let lc = p.leading().unwrap().1.clone();
    p.mul_mono(c.inv()).scale(&lc.recip())
}

/// Coprimality certificate from univariate images modulo a large prime.
/// If the images at a point with nonvanishing leading coefficient have a
/// constant gcd in both variable directions, the true gcd is constant.
mod modp {
    use super::super::modp::{inv, mul, red, P};
    use super::{BPoly, UPoly};

    /// Dense mod-p matrix m[t][x].
    fn reduce(p: &BPoly) -> Option<Vec<Vec<u64>>> {
        p.iter().map(|u: &UPoly| u.0.iter().map(red).collect()).collect()
    }

    fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    fn eval(u: &[u64], x: u64) -> u64 {
        u.iter().rev().fold(0, |acc, c| (mul(acc, x) + c) % P)
    }

    fn rem(a: &mut Vec<u64>, b: &[u64]) {
        let db = b.len() - 1;
        let il = inv(b[db]);
        while a.len() > db {
            let k = a.len() - 1 - db;
            let c = mul(*a.last().unwrap(), il);
            for (j, bc) in b.iter().enumerate() {
                a[k + j] = (a[k + j] + P - mul(c, *bc)) % P;
            }
            trim(a);
        }
    }

    fn gcd_deg(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
        trim(&mut a);
        trim(&mut b);
        while !b.is_empty() {
            rem(&mut a, &b);
            std::mem::swap(&mut a, &mut b);
        }
        a.len().saturating_sub(1)
    }

    /// Image in the main variable after evaluating the other at x.
    fn image(m: &[Vec<u64>], x: u64) -> Vec<u64> {
        m.iter().map(|u| eval(u, x)).collect()
    }

    fn transpose(m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let w = m.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = vec![vec![0; m.len()]; w];
        for (i, r) in m.iter().enumerate() {
            for (j, c) in r.iter().enumerate() {
                out[j][i] = *c;
            }
        }
        out
    }

    fn direction_ok(a: &[Vec<u64>], b: &[Vec<u64>]) -> bool {
        if a.len() <= 1 || b.len() <= 1 {
            return true;
        }
        for x in [3u64, 7, 12345, 987654321] {
            let (ia, ib) = (image(a, x), image(b, x));
            if ia.last() == Some(&0) || ib.last() == Some(&0) {
                continue;
            }
            return gcd_deg(ia, ib) == 0;
        }
        false
    }

    pub(super) fn certainly_coprime(a: &BPoly, b: &BPoly) -> bool {
        let (Some(ma), Some(mb)) = (reduce(a), reduce(b)) else { return false };
        direction_ok(&ma, &mb) && direction_ok(&transpose(&ma), &transpose(&mb))
    }
}
