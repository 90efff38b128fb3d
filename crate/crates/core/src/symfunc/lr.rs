//! Littlewood–Richardson coefficients by counting LR tableaux.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{partitions_of, MultiPartition, Partition};

/// Number of LR tableaux of shape λ/μ and content ν.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !mu.is_contained_in(lambda) || lambda.size() != mu.size() + nu.size() {
        return 0;
    }
    // cells in reading order: rows from the longest down, right to left
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        for j in (mu.part(i)..lambda.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut fill: HashMap<(usize, usize), usize> = HashMap::new();
    let mut count = vec![0usize; nu.len() + 1];
    fn rec(
        k: usize,
        cells: &[(usize, usize)],
        mu: &Partition,
        lambda: &Partition,
        nu: &Partition,
        fill: &mut HashMap<(usize, usize), usize>,
        count: &mut Vec<usize>,
    ) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (i, j) = cells[k];
        // weakly increasing along the row: bounded by the entry to the right
        let hi = if j + 1 < lambda.part(i) { fill[&(i, j + 1)] } else { nu.len() };
        // strictly increasing down the column
        let lo = if i > 0 && j >= mu.part(i - 1) { fill[&(i - 1, j)] + 1 } else { 1 };
        let mut total = 0;
        for v in lo..=hi {
            if count[v] >= nu.part(v - 1) {
                continue;
            }
            if v > 1 && count[v] + 1 > count[v - 1] {
                continue;
            }
            count[v] += 1;
            fill.insert((i, j), v);
            total += rec(k + 1, cells, mu, lambda, nu, fill, count);
            fill.remove(&(i, j));
            count[v] -= 1;
        }
        total
    }
    rec(0, &cells, mu, lambda, nu, &mut fill, &mut count)
}

/// s_μ · s_ν in the Schur basis.
pub fn lr_product(mu: &Partition, nu: &Partition) -> Arc<BTreeMap<Partition, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<(Partition, Partition), Arc<BTreeMap<Partition, u64>>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if mu <= nu { (mu.clone(), nu.clone()) } else { (nu.clone(), mu.clone()) };
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let mut out = BTreeMap::new();
    for l in partitions_of(mu.size() + nu.size()) {
        if mu.is_contained_in(&l) && nu.is_contained_in(&l) {
            let c = lr_tableaux(&l, mu, nu);
            if c > 0 {
                out.insert(l, c);
            }
        }
    }
    let out = Arc::new(out);
    cache.write().unwrap().insert(key, out.clone());
    out
}

/// ⟨s_{μ(0)} ⋯ s_{μ(r−1)}, s_λ⟩.
pub fn lr_coeff(multi: &MultiPartition, lambda: &Partition) -> u64 {
    if multi.size() != lambda.size() {
        return 0;
    }
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::from([(Partition::empty(), 1)]);
    for comp in &multi.components {
        let mut next = BTreeMap::new();
        for (p, c) in &acc {
            if !p.is_contained_in(lambda) {
                continue;
            }
            for (q, d) in lr_product(p, comp).iter() {
                if q.is_contained_in(lambda) {
                    *next.entry(q.clone()).or_insert(0) += c * d;
                }
            }
        }
        acc = next;
    }
    acc.get(lambda).copied().unwrap_or(0)
}
