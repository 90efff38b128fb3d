//! Irreducible characters of S_n by the Murnaghan–Nakayama rule.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::partitions::{partitions_of, Partition};

pub struct CharTable {
    pub n: usize,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// chi[λ][ρ]
    pub chi: Vec<Vec<i64>>,
    /// z_ρ
    pub z: Vec<u128>,
}

impl CharTable {
    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }
}

pub fn z_rho(rho: &Partition) -> u128 {
    let mut z: u128 = 1;
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &k in rho.parts() {
        *counts.entry(k).or_insert(0) += 1;
    }
    for (k, m) in counts {
        z *= (k as u128).pow(m as u32);
        z *= (1..=m).product::<u128>();
    }
    z
}

/// χ^λ(ρ) with β-numbers: removing a k-rim-hook moves a bead from b to b-k,
/// with sign (-1)^{beads jumped}.
fn mn(beta: &[usize], rho: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (beta.to_vec(), rho.len());
    if let Some(v) = memo.get(&key) {
        return *v;
    }
    let k = rho[0];
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next[i] = b - k;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn(&next, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    let t = char_table(lambda.size());
    t.chi[t.idx(lambda)][t.idx(rho)]
}

pub fn char_table(n: usize) -> Arc<CharTable> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CharTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&n) {
        return t.clone();
    }
    let parts = partitions_of(n);
    let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    let m = n.max(1);
    let mut chi = vec![vec![0i64; parts.len()]; parts.len()];
    for (j, rho) in parts.iter().enumerate() {
        // ρ read with its parts in order; the memo is keyed by the suffix length
        let mut memo = HashMap::new();
        for (i, l) in parts.iter().enumerate() {
            let beta: Vec<usize> = (0..m).map(|k| l.part(k) + m - 1 - k).collect();
            chi[i][j] = mn(&beta, rho.parts(), &mut memo);
        }
    }
    let z = parts.iter().map(z_rho).collect();
    let t = Arc::new(CharTable { n, parts, index, chi, z });
    cache.write().unwrap().insert(n, t.clone());
    t
}
