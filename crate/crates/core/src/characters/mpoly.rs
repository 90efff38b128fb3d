//! Sparse Laurent polynomials in q, t, z_1..z_n with integer coefficients,
//! truncated by total (q,t)-degree.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// Exponent layout: [q, t, z_1, .., z_n].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ZPoly {
    pub terms: HashMap<Vec<i64>, i128>,
}

impl ZPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(e: Vec<i64>, c: i128) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: i128) {
        if c == 0 {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &ZPoly) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), *c);
        }
    }

    pub fn scale(&self, c: i128) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).filter(|(_, v)| *v != 0).collect() }
    }

    /// Product, dropping terms of (q,t)-degree above `bound`.
    pub fn mul_trunc(&self, o: &ZPoly, bound: i64) -> ZPoly {
        let mut out: HashMap<Vec<i64>, i128> = HashMap::new();
        for (a, x) in &self.terms {
            let da = a[0] + a[1];
            for (b, y) in &o.terms {
                if da + b[0] + b[1] > bound {
                    continue;
                }
                let e: Vec<i64> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                *out.entry(e).or_insert(0) += x * y;
            }
        }
        out.retain(|_, v| *v != 0);
        ZPoly { terms: out }
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        self.mul_trunc(o, i64::MAX / 4)
    }

    /// Exact quotient by z_i − z_j (i < j), by division with z_i leading.
    pub fn div_linear(&self, i: usize, j: usize) -> Result<ZPoly> {
        let (zi, zj) = (2 + i, 2 + j);
        // group by everything except z_i, z_j; within a group the exponent
        // sum of z_i and z_j is constant and the quotient follows by peeling
        let mut groups: HashMap<(Vec<i64>, i64), Vec<(i64, i128)>> = HashMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            key[zi] = 0;
            key[zj] = 0;
            groups.entry((key, e[zi] + e[zj])).or_default().push((e[zi], *c));
        }
        let mut out = ZPoly::zero();
        for ((key, s), mut v) in groups {
            v.sort_by_key(|x| std::cmp::Reverse(x.0));
            // P = Σ c_a z_i^a z_j^{s−a}; Q = Σ d_b z_i^b z_j^{s−1−b};
            // c_a = d_{a−1} − d_a
            let (hi, lo) = (v[0].0, v.last().unwrap().0);
            let coeff: HashMap<i64, i128> = v.into_iter().collect();
            let mut d = 0i128;
            for a in (lo + 1..=hi).rev() {
                d += coeff.get(&a).copied().unwrap_or(0);
                if d != 0 {
                    let mut e = key.clone();
                    e[zi] = a - 1;
                    e[zj] = s - a;
                    out.add_term(e, d);
                }
            }
            if d + coeff.get(&lo).copied().unwrap_or(0) != 0 {
                return Err(Error::Internal(format!("z{} − z{} does not divide the numerator", i + 1, j + 1)));
            }
        }
        Ok(out)
    }
}
