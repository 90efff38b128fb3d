//! Plethystic scalings p_k ↦ p_k · ∏ (1 − m_j^k)^{e_j} in the Schur basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;

use super::chars::char_table;
use crate::partitions::Partition;
use crate::qtfield::{sum_factored, Coeff, Factored, Mono, QTRational};

/// A multiplicative alphabet factor: Z ↦ Z · ∏ (1 − m_j)^{e_j}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlethFactor(pub Vec<(Mono, i32)>);

impl PlethFactor {
    /// Z/(1−t)
    pub fn over_one_minus_t() -> Self {
        PlethFactor(vec![(Mono::t(), -1)])
    }
    /// Z(1−t)
    pub fn one_minus_t() -> Self {
        PlethFactor(vec![(Mono::t(), 1)])
    }
    /// (1−q)Z
    pub fn one_minus_q() -> Self {
        PlethFactor(vec![(Mono::q(), 1)])
    }
    /// Z/(1−q)
    pub fn over_one_minus_q() -> Self {
        PlethFactor(vec![(Mono::q(), -1)])
    }

    /// ∏ (1 − m_j^k)^{e_j}, the image of p_k / p_k.
    pub fn at(&self, k: usize) -> Factored {
        let mut f = Factored::one();
        for &(m, e) in &self.0 {
            f.mul_assign(&Factored::one_minus(m.pow(k as i32)).expect("trivial plethystic factor").pow(e));
        }
        f
    }
}

/// ⟨s_λ[Z·F], s_ν⟩ = Σ_ρ χ^λ(ρ) χ^ν(ρ) / z_ρ · ∏_i F(ρ_i).
pub fn pleth_coeff(lambda: &Partition, nu: &Partition, f: &PlethFactor) -> QTRational {
    assert_eq!(lambda.size(), nu.size());
    let t = char_table(lambda.size());
    let (a, b) = (t.idx(lambda), t.idx(nu));
    let terms: Vec<Factored> = t
        .parts
        .iter()
        .enumerate()
        .filter_map(|(r, rho)| {
            let c = t.chi[a][r] * t.chi[b][r];
            if c == 0 {
                return None;
            }
            let mut term = Factored::constant(Coeff::new(c.into(), t.z[r].into())).unwrap();
            for &k in rho.parts() {
                term.mul_assign(&f.at(k));
            }
            Some(term)
        })
        .collect();
    sum_factored(&terms)
}

/// Full matrix M[λ][ν] in the order of `partitions_of(n)`, cached.
pub fn pleth_matrix(n: usize, f: &PlethFactor) -> Arc<Vec<Vec<QTRational>>> {
    type Cache = RwLock<HashMap<(usize, PlethFactor), Arc<Vec<Vec<QTRational>>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (n, f.clone());
    if let Some(m) = cache.read().unwrap().get(&key) {
        return m.clone();
    }
    let t = char_table(n);
    let np = t.parts.len();
    // ∏ F(ρ_i) once per ρ
    let weights: Vec<Factored> = t
        .parts
        .iter()
        .enumerate()
        .map(|(r, rho)| {
            let mut w = Factored::constant(Coeff::new(1.into(), t.z[r].into())).unwrap();
            for &k in rho.parts() {
                w.mul_assign(&f.at(k));
            }
            w
        })
        .collect();
    let rows: Vec<Vec<QTRational>> = (0..np)
        .into_par_iter()
        .map(|a| {
            (0..np)
                .map(|b| {
                    let terms: Vec<Factored> = (0..np)
                        .filter_map(|r| {
                            let c = t.chi[a][r] * t.chi[b][r];
                            (c != 0).then(|| weights[r].scale(&Coeff::from_integer(c.into())).unwrap())
                        })
                        .collect();
                    sum_factored(&terms)
                })
                .collect()
        })
        .collect();
    let m = Arc::new(rows);
    cache.write().unwrap().insert(key, m.clone());
    m
}
