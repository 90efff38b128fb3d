//! The two truncated series for the T-character of R: the Hesselink-type
//! sum over the root cone and the fixed-point sum over W.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use super::mpoly::ZPoly;
use crate::macdonald::{degen_macdonald, DegenVariant};
use crate::qtfield::{c, Mono, QTLaurent, QTSeries};
use crate::error::Result;
use crate::weights::{kostant, permutations, KostantKind, KostantTable, RootDataA, Weight};

pub const SERIES_RANK_CAP: usize = 3;

/// Coefficients of z-monomials, each a (q,t)-series certified through `bound`,
/// for every z-exponent with all coordinates in [−window, window].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TCharacterSeries {
    pub n: usize,
    pub bound: i64,
    pub window: i64,
    #[serde(serialize_with = "as_entries")]
    pub coeffs: BTreeMap<Vec<i64>, QTSeries>,
}

#[derive(Serialize)]
struct Entry<'a> {
    z: &'a [i64],
    series: &'a QTSeries,
}

fn as_entries<S: serde::Serializer>(m: &BTreeMap<Vec<i64>, QTSeries>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|(z, series)| Entry { z, series }))
}

impl TCharacterSeries {
    fn from_zpoly(n: usize, bound: i64, p: &ZPoly) -> Self {
        let window = bound;
        let mut grouped: BTreeMap<Vec<i64>, Vec<(Mono, crate::qtfield::Coeff)>> = BTreeMap::new();
        for (e, v) in &p.terms {
            let z = e[2..].to_vec();
            if e[0] + e[1] > bound || z.iter().any(|x| x.abs() > window) {
                continue;
            }
            grouped.entry(z).or_default().push((Mono::new(e[0] as i32, e[1] as i32), c(*v as i64)));
        }
        let coeffs = grouped
            .into_iter()
            .map(|(z, ts)| (z, QTSeries::new(QTLaurent::from_terms(ts), bound)))
            .filter(|(_, s)| !s.is_zero())
            .collect();
        TCharacterSeries { n, bound, window, coeffs }
    }

    pub fn coeff(&self, z: &[i64]) -> QTSeries {
        self.coeffs.get(z).cloned().unwrap_or_else(|| QTSeries::zero(self.bound))
    }
}

/// 𝒫(λ;q,t) as a series through degree `bound`; zero outside the cone.
pub fn biv_kostant(lambda: &Weight, bound: i64) -> QTSeries {
    QTSeries::new(kostant(lambda, KostantKind::QT), bound)
}

/// z-monomial expansion of the GL_n character s_μ, μ dominant.
pub fn schur_monomials(mu: &Weight) -> Vec<(Vec<i64>, i64)> {
    let n = mu.n();
    let shift = mu.coords().last().copied().unwrap_or(0);
    let shape: Vec<usize> = mu.coords().iter().map(|x| (x - shift) as usize).collect();
    let mut counts: HashMap<Vec<i64>, i64> = HashMap::new();
    // row-by-row fill with entries 0..n, rows weak, columns strict
    fn go(shape: &[usize], r: usize, c: usize, grid: &mut Vec<Vec<usize>>, n: usize, content: &mut Vec<i64>, out: &mut HashMap<Vec<i64>, i64>) {
        if r == shape.len() || shape[r] == 0 {
            *out.entry(content.clone()).or_insert(0) += 1;
            return;
        }
        if c == shape[r] {
            return go(shape, r + 1, 0, grid, n, content, out);
        }
        let mut lo = if c > 0 { grid[r][c - 1] } else { 0 };
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        for v in lo..n {
            grid[r][c] = v;
            content[v] += 1;
            go(shape, r, c + 1, grid, n, content, out);
            content[v] -= 1;
        }
    }
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();
    go(&shape, 0, 0, &mut grid, n, &mut vec![0; n], &mut counts);
    counts.into_iter().map(|(e, k)| (e.into_iter().map(|x| x + shift).collect(), k)).collect()
}

/// Σ_{a+b ≤ D} C(a+n−1,n−1) C(b+n−1,n−1) q^a t^b = (1−q)^{−n}(1−t)^{−n}.
fn prefactor_series(n: usize, bound: i64) -> ZPoly {
    let binom = |m: i64, k: i64| -> i128 { (1..=k).fold(1i128, |acc, i| acc * (m - k + i) as i128 / i as i128) };
    let mut p = ZPoly::zero();
    for a in 0..=bound {
        for b in 0..=bound - a {
            let mut e = vec![0; n + 2];
            e[0] = a;
            e[1] = b;
            p.add_term(e, binom(a + n as i64 - 1, n as i64 - 1) * binom(b + n as i64 - 1, n as i64 - 1));
        }
    }
    p
}

fn check_rank(n: usize) {
    assert!((1..=SERIES_RANK_CAP).contains(&n), "rank {} is outside 1..={}", n, SERIES_RANK_CAP);
}

/// (1−q)^{−n}(1−t)^{−n} Σ_{λ∈Q₊} 𝒫(λ;q,t) ã_{λμ}(qt) s_μ(z) through degree D.
/// Every root in a decomposition of λ costs (q,t)-degree at least one and has
/// height at most n−1, so λ of height above D(n−1) cannot contribute.
pub fn chi_r_thm(n: usize, bound: i64) -> Result<TCharacterSeries> {
    check_rank(n);
    let height = bound * (n as i64 - 1);
    let table = KostantTable::up_to_height(n, height, KostantKind::QT);
    let entries: Vec<(Weight, QTLaurent)> = table
        .entries()
        .filter(|(w, _)| w.simple_root_coords().unwrap().iter().sum::<i64>() <= height)
        .map(|(w, p)| (w, p.truncate2(2 * bound)))
        .filter(|(_, p)| !p.is_zero())
        .collect();
    let parts = entries
        .par_iter()
        .map(|(lambda, kp)| {
            let mut acc = ZPoly::zero();
            let tilde = degen_macdonald(lambda, DegenVariant::Tilde)?;
            for (mu, a) in &tilde.coeffs {
                let aqt = a.map_monos(|m| Mono::doubled(m.t2, m.t2));
                let coef = (kp * &aqt).truncate2(2 * bound);
                if coef.is_zero() {
                    continue;
                }
                for (z, k) in schur_monomials(mu) {
                    for (m, v) in coef.terms() {
                        let mut e = vec![(m.q2 / 2) as i64, (m.t2 / 2) as i64];
                        e.extend(&z);
                        let v: i128 = v.to_integer().try_into().expect("small coefficient");
                        acc.add_term(e, v * k as i128);
                    }
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<ZPoly>>>()?;
    let mut total = ZPoly::zero();
    for p in &parts {
        total.add_assign(p);
    }
    let total = total.mul_trunc(&prefactor_series(n, bound), bound);
    Ok(TCharacterSeries::from_zpoly(n, bound, &total))
}

fn zmono(n: usize, q: i64, t: i64, z: &[(usize, i64)]) -> Vec<i64> {
    let mut e = vec![0; n + 2];
    e[0] = q;
    e[1] = t;
    for &(i, k) in z {
        e[2 + i] += k;
    }
    e
}

/// 1 − m, as a ZPoly.
fn one_minus(n: usize, m: Vec<i64>) -> ZPoly {
    let mut p = ZPoly::monomial(vec![0; n + 2], 1);
    p.add_term(m, -1);
    p
}

/// Σ_{k ≤ bound} m^k for a monomial m of (q,t)-degree one.
fn geometric(m: &[i64], bound: i64) -> ZPoly {
    let mut p = ZPoly::zero();
    for k in 0..=bound {
        p.add_term(m.iter().map(|x| x * k).collect(), 1);
    }
    p
}

/// (1−q)^{−n}(1−t)^{−n} Σ_w w(∏_{α>0} (1−qte^α)/((1−qe^α)(1−te^α)(1−e^{−α}))).
/// The W-sum is taken over the denominator ∏_{α∈R}(1−qe^α)(1−te^α) times the
/// Vandermonde; the Vandermonde is divided out exactly before expanding.
pub fn chi_r_atiyah_bott(n: usize, bound: i64) -> Result<TCharacterSeries> {
    check_rank(n);
    let roots = RootDataA::new(n).positive_roots();
    let terms: Vec<ZPoly> = permutations(n)
        .par_iter()
        .map(|w| {
            let sign = if RootDataA::new(n).length(w).is_multiple_of(2) { 1 } else { -1 };
            let rho: Vec<(usize, i64)> = (0..n).map(|i| (w[i], (n - 1 - i) as i64)).collect();
            let mut p = ZPoly::monomial(zmono(n, 0, 0, &rho), sign);
            for &(i, j) in &roots {
                let (a, b) = (w[i], w[j]);
                p = p.mul(&one_minus(n, zmono(n, 1, 1, &[(a, 1), (b, -1)])));
                p = p.mul(&one_minus(n, zmono(n, 1, 0, &[(a, -1), (b, 1)])));
                p = p.mul(&one_minus(n, zmono(n, 0, 1, &[(a, -1), (b, 1)])));
            }
            p
        })
        .collect();
    let mut num = ZPoly::zero();
    for p in &terms {
        num.add_assign(p);
    }
    for &(i, j) in &roots {
        num = num.div_linear(i, j)?;
    }
    let mut series = prefactor_series(n, bound);
    for &(i, j) in &roots {
        for (a, b) in [(i, j), (j, i)] {
            series = series.mul_trunc(&geometric(&zmono(n, 1, 0, &[(a, 1), (b, -1)]), bound), bound);
            series = series.mul_trunc(&geometric(&zmono(n, 0, 1, &[(a, 1), (b, -1)]), bound), bound);
        }
    }
    let total = num.mul_trunc(&series, bound);
    Ok(TCharacterSeries::from_zpoly(n, bound, &total))
}
