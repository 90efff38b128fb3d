use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use super::weight::Weight;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// Finite Z-linear combination of partitions.
pub type ZCombo = BTreeMap<Partition, i64>;

fn check_rank(l: &Partition, n: usize) -> Result<()> {
    if l.len() >= n {
        return Err(Error::Invalid(format!("{} must have fewer than {} parts", l, n)));
    }
    Ok(())
}

/// All μ ⊆ λ with λ/μ a horizontal strip, i.e. λ_{i+1} ≤ μ_i ≤ λ_i.
pub fn horizontal_strip_below(l: &Partition) -> Vec<Partition> {
    let mut out = vec![Vec::new()];
    for i in 0..l.len() {
        let (lo, hi) = (l.part(i + 1), l.part(i));
        out = out
            .into_iter()
            .flat_map(|v: Vec<usize>| {
                (lo..=hi).rev().map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|v| Partition::new(v).unwrap()).collect()
}

/// ψ(λ) = Σ μ over μ ⪯ λ with λ/μ a horizontal strip.
pub fn psi(l: &Partition, n: usize) -> Result<ZCombo> {
    check_rank(l, n)?;
    Ok(horizontal_strip_below(l).into_iter().map(|m| (m, 1)).collect())
}

/// φ = ψ⁻¹, by inversion over the containment downset of λ.
pub fn phi(l: &Partition, n: usize) -> Result<ZCombo> {
    check_rank(l, n)?;
    Ok(phi_cached(l))
}

fn phi_cached(l: &Partition) -> ZCombo {
    static CACHE: OnceLock<RwLock<HashMap<Partition, ZCombo>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.read().unwrap().get(l) {
        return v.clone();
    }
    // ψ is unitriangular: ψ(λ) = λ + (strictly smaller terms)
    let mut out: ZCombo = BTreeMap::from([(l.clone(), 1)]);
    for m in horizontal_strip_below(l) {
        if &m == l {
            continue;
        }
        for (k, v) in phi_cached(&m) {
            *out.entry(k).or_insert(0) -= v;
        }
    }
    out.retain(|_, v| *v != 0);
    cache.write().unwrap().insert(l.clone(), out.clone());
    out
}

/// Applies ψ linearly.
pub fn psi_combo(c: &ZCombo, n: usize) -> Result<ZCombo> {
    let mut out = ZCombo::new();
    for (k, v) in c {
        for (m, w) in psi(k, n)? {
            *out.entry(m).or_insert(0) += v * w;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

pub fn phi_combo(c: &ZCombo, n: usize) -> Result<ZCombo> {
    let mut out = ZCombo::new();
    for (k, v) in c {
        for (m, w) in phi(k, n)? {
            *out.entry(m).or_insert(0) += v * w;
        }
    }
    out.retain(|_, v| *v != 0);
    Ok(out)
}

/// μ⋆ = −w₀(μ_1, …, μ_{n−1}, −|μ|) = (|μ|, −μ_{n−1}, …, −μ_1).
pub fn star(mu: &Partition, n: usize) -> Result<Weight> {
    check_rank(mu, n)?;
    let mut c = vec![mu.size() as i64];
    for i in (0..n - 1).rev() {
        c.push(-(mu.part(i) as i64));
    }
    let w = Weight::new(c);
    debug_assert!(w.is_dominant() && w.size() == 0);
    Ok(w)
}

/// μ† = μ + ((1 − μ_n)^n).
pub fn dagger(mu: &Weight) -> Weight {
    let s = 1 - mu.get(mu.n() - 1);
    Weight::new(mu.coords().iter().map(|x| x + s).collect())
}

/// E(μ,m): dominant ν obtained by removing m boxes from μ, no two in the
/// same column, i.e. μ_{i+1} ≤ ν_i ≤ μ_i for i < n and ν_n ≤ μ_n.
pub fn inverse_pieri_set(mu: &Weight, m: usize) -> BTreeSet<Weight> {
    let n = mu.n();
    let mut out = BTreeSet::new();
    if n == 0 {
        return out;
    }
    fn rec(mu: &Weight, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut BTreeSet<Weight>) {
        let n = mu.n();
        if i == n - 1 {
            cur.push(mu.get(i) - left);
            out.insert(Weight::new(cur.clone()));
            cur.pop();
            return;
        }
        let room = (mu.get(i) - mu.get(i + 1)).min(left);
        for d in 0..=room {
            cur.push(mu.get(i) - d);
            rec(mu, i + 1, left - d, cur, out);
            cur.pop();
        }
    }
    rec(mu, 0, m as i64, &mut Vec::new(), &mut out);
    out
}
