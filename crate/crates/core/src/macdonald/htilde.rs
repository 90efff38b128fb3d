//! Transformed Macdonald polynomials from the triangularity axioms.
//!
//! The unknowns are the Schur coefficients c_λ of H̃_μ. The axioms are linear:
//! ⟨H̃_μ[Z(1−q)], s_ν⟩ = 0 for ν ≱ μ, ⟨H̃_μ[Z(1−t)], s_ν⟩ = 0 for ν ≱ μ′ and
//! c_(n) = 1, and all three have polynomial entries. The system is solved at
//! points of a grid modulo a 61-bit prime, each c_λ is interpolated on the
//! grid (deg_q ≤ n(μ′), deg_t ≤ n(μ)) and lifted to integers, and the lifted
//! answer is then checked against the axioms in exact arithmetic.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{partitions_of, Partition};
use crate::qtfield::modp;
use crate::qtfield::{Coeff, Mono, QTLaurent, QTRational};
use crate::symfunc::{char_table, CharTable, PlethFactor, SchurExpansion};

pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Every coefficient of K̃_{λμ} lies in [0, n!]; the lift accepts a wider band.
const LIFT_BOUND: i64 = 1 << 40;

fn dominates(a: &Partition, b: &Partition) -> bool {
    b.dominance_le(a).unwrap_or(false)
}

/// ⟨s_λ[Z(1−x)], s_ν⟩ modulo P at x.
fn scaled_matrix_modp(t: &CharTable, x: u64) -> Vec<Vec<u64>> {
    let np = t.parts.len();
    let w: Vec<u64> = t
        .parts
        .iter()
        .enumerate()
        .map(|(r, rho)| {
            let mut acc = modp::inv(modp::red_int(&t.z[r].into()));
            for &k in rho.parts() {
                acc = modp::mul(acc, modp::sub(1, modp::pow(x, k as u64)));
            }
            acc
        })
        .collect();
    (0..np)
        .map(|a| {
            (0..np)
                .map(|b| {
                    (0..np).fold(0, |acc, r| {
                        let c = modp::from_i64(t.chi[a][r] * t.chi[b][r]);
                        modp::add(acc, modp::mul(c, w[r]))
                    })
                })
                .collect()
        })
        .collect()
}

/// Solves the stacked system at (q, t); None if it does not have full rank.
fn solve_at(t: &CharTable, mu: &Partition, q: u64, tv: u64) -> Option<Vec<u64>> {
    let np = t.parts.len();
    let muc = mu.conjugate();
    let mq = scaled_matrix_modp(t, q);
    let mt = scaled_matrix_modp(t, tv);
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (b, nu) in t.parts.iter().enumerate() {
        if !dominates(nu, mu) {
            rows.push((0..np).map(|a| mq[a][b]).chain([0]).collect());
        }
        if !dominates(nu, &muc) {
            rows.push((0..np).map(|a| mt[a][b]).chain([0]).collect());
        }
    }
    let top = t.idx(&Partition::row(mu.size()));
    let mut norm = vec![0; np + 1];
    norm[top] = 1;
    norm[np] = 1;
    rows.push(norm);
    gauss_modp(rows, np)
}

/// Unique solution of an augmented system with `nv` unknowns.
fn gauss_modp(mut rows: Vec<Vec<u64>>, nv: usize) -> Option<Vec<u64>> {
    let mut r = 0;
    for c in 0..nv {
        let piv = (r..rows.len()).find(|&i| rows[i][c] != 0)?;
        rows.swap(r, piv);
        let inv = modp::inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = modp::mul(*x, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c];
                for j in c..=nv {
                    rows[i][j] = modp::sub(rows[i][j], modp::mul(f, rows[r][j]));
                }
            }
        }
        r += 1;
    }
    // leftover rows must be consistent
    if rows[r..].iter().any(|row| row[nv] != 0) {
        return None;
    }
    Some((0..nv).map(|i| rows[i][nv]).collect())
}

/// Newton interpolation through (x_i, y_i), returning ascending coefficients.
fn interpolate(xs: &[u64], ys: &[u64]) -> Vec<u64> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for k in 1..n {
        for i in (k..n).rev() {
            let num = modp::sub(dd[i], dd[i - 1]);
            dd[i] = modp::mul(num, modp::inv(modp::sub(xs[i], xs[i - k])));
        }
    }
    let mut coeffs = vec![0u64; n];
    for k in (0..n).rev() {
        // coeffs = coeffs · (x − x_k) + dd[k]
        let mut next = vec![0u64; n];
        for (i, &c) in coeffs.iter().enumerate() {
            if i + 1 < n {
                next[i + 1] = modp::add(next[i + 1], c);
            }
            next[i] = modp::sub(next[i], modp::mul(c, xs[k]));
        }
        next[0] = modp::add(next[0], dd[k]);
        coeffs = next;
    }
    coeffs
}

fn nodes(count: usize, salt: u64) -> Vec<u64> {
    (0..count as u64).map(|i| modp::red_int(&(0x9E37_79B9_7F4A_7C15u64.wrapping_mul(i + 1 + 31 * salt)).into())).collect()
}

fn solve_mod(mu: &Partition) -> Result<BTreeMap<Partition, QTLaurent>> {
    let n = mu.size();
    let t = char_table(n);
    let (dq, dt) = (mu.conjugate().n_stat(), mu.n_stat());
    for salt in 0..4u64 {
        let qs = nodes(dq + 1, 2 * salt);
        let ts = nodes(dt + 1, 2 * salt + 1);
        let grid: Vec<(usize, usize)> = (0..=dq).flat_map(|i| (0..=dt).map(move |j| (i, j))).collect();
        let sols: Option<Vec<Vec<u64>>> =
            grid.par_iter().map(|&(i, j)| solve_at(&t, mu, qs[i], ts[j])).collect();
        let Some(sols) = sols else { continue };
        let mut out = BTreeMap::new();
        for (l, lam) in t.parts.iter().enumerate() {
            // interpolate in q for each t-node, then each q-coefficient in t
            let by_t: Vec<Vec<u64>> = (0..=dt)
                .map(|j| interpolate(&qs, &(0..=dq).map(|i| sols[i * (dt + 1) + j][l]).collect::<Vec<_>>()))
                .collect();
            let mut terms = Vec::new();
            for a in 0..=dq {
                let col: Vec<u64> = (0..=dt).map(|j| by_t[j][a]).collect();
                for (b, c) in interpolate(&ts, &col).into_iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let v = modp::lift_checked(c, LIFT_BOUND)
                        .ok_or_else(|| Error::Internal(format!("coefficient of H~{} at s{} does not lift", mu, lam)))?;
                    terms.push((Mono::new(a as i32, b as i32), Coeff::from_integer(v.into())));
                }
            }
            let p = QTLaurent::from_terms(terms);
            if !p.is_zero() {
                out.insert(lam.clone(), p);
            }
        }
        return Ok(out);
    }
    Err(Error::Internal(format!("triangularity system for {} is not uniquely solvable", mu)))
}

/// Exact check of the three axioms.
pub fn satisfies_axioms(mu: &Partition, h: &SchurExpansion) -> bool {
    let n = mu.size();
    if !h.coeff(&Partition::row(n)).is_one() {
        return false;
    }
    let muc = mu.conjugate();
    let hq = h.pleth_scale(&PlethFactor::one_minus_q());
    let ht = h.pleth_scale(&PlethFactor::one_minus_t());
    hq.terms().keys().all(|l| dominates(l, mu)) && ht.terms().keys().all(|l| dominates(l, &muc))
}

/// H̃_μ in the Schur basis.
pub fn modified_macdonald(mu: &Partition) -> Result<Arc<SchurExpansion>> {
    type Cache = RwLock<HashMap<Partition, Arc<SchurExpansion>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    if mu.size() > DEFAULT_DEGREE_CAP {
        return Err(Error::Invalid(format!("degree {} exceeds the cap {}", mu.size(), DEFAULT_DEGREE_CAP)));
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(h) = cache.read().unwrap().get(mu) {
        return Ok(h.clone());
    }
    let coeffs = solve_mod(mu)?;
    let h = SchurExpansion::from_map(coeffs.into_iter().map(|(k, v)| (k, QTRational::from_laurent(v))).collect());
    if !satisfies_axioms(mu, &h) {
        return Err(Error::Internal(format!("interpolated H~{} fails the axioms", mu)));
    }
    let h = Arc::new(h);
    cache.write().unwrap().insert(mu.clone(), h.clone());
    Ok(h)
}

/// K̃_{λμ}(q,t) for all λ, μ ⊢ n.
#[derive(Clone, Debug)]
pub struct KostkaMacdonaldTable {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub columns: Vec<Arc<SchurExpansion>>,
}

impl KostkaMacdonaldTable {
    pub fn new(n: usize) -> Result<Self> {
        let parts = partitions_of(n);
        let columns = parts.par_iter().map(modified_macdonald).collect::<Result<Vec<_>>>()?;
        Ok(KostkaMacdonaldTable { n, parts, columns })
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> QTRational {
        let j = self.parts.iter().position(|p| p == mu).expect("partition of n");
        self.columns[j].coeff(lambda)
    }
}
