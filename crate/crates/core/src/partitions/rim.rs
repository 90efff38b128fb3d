use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::Serialize;

use super::partition::{partitions_of, sub_partitions, Partition};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MultiPartition {
    pub components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        MultiPartition { components }
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.components.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", s.join(", "))
    }
}

impl fmt::Debug for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: MultiPartition,
    pub sign: i32,
}

/// r-core, r-quotient and r-sign from β-numbers μ + ρ, ρ = (m-1, …, 0).
///
/// The slot count is raised to the next multiple of r (at least `m`), which
/// makes the residue labelling of the quotient independent of m. Within each
/// residue class the β-numbers of μ are matched in order with those of the
/// core; the sign is the parity of that matching.
pub fn r_core_quotient_sign(mu: &Partition, r: usize, m: usize) -> Result<CoreQuotient> {
    if r == 0 {
        return Err(Error::Invalid("r must be positive".into()));
    }
    if m < mu.len() {
        return Err(Error::Invalid(format!("{} slots cannot hold {}", m, mu)));
    }
    let m = m.max(1).div_ceil(r) * r;
    let beta: Vec<usize> = (0..m).map(|i| mu.part(i) + m - 1 - i).collect();
    // slide every bead down its runner as far as possible
    let mut runners: Vec<Vec<usize>> = vec![Vec::new(); r];
    for &b in &beta {
        runners[b % r].push(b);
    }
    let mut core_beta: Vec<usize> = Vec::with_capacity(m);
    for (y, run) in runners.iter().enumerate() {
        for k in 0..run.len() {
            core_beta.push(y + r * k);
        }
    }
    core_beta.sort_unstable_by(|a, b| b.cmp(a));
    let core = Partition::new((0..m).map(|i| core_beta[i] - (m - 1 - i)).collect())?;
    // matching: the k-th largest bead of μ on runner y goes to the k-th
    // largest core bead on runner y
    let mut quotient = vec![Vec::new(); r];
    let mut target: Vec<usize> = Vec::with_capacity(m);
    for (y, run) in runners.iter().enumerate() {
        let len = run.len();
        for (k, &b) in run.iter().enumerate() {
            let c = y + r * (len - 1 - k);
            quotient[y].push((b - c) / r);
            target.push(c);
        }
    }
    // target listed in β-order of μ
    let mut pairs: Vec<(usize, usize)> = runners.iter().flatten().copied().zip(target).collect();
    pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let pos: HashMap<usize, usize> = core_beta.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let perm: Vec<usize> = pairs.iter().map(|(_, c)| pos[c]).collect();
    let sign = permutation_sign(&perm);
    let quotient = MultiPartition::new(quotient.into_iter().map(|v| Partition::new(v).unwrap()).collect());
    Ok(CoreQuotient { core, quotient, sign })
}

pub fn permutation_sign(p: &[usize]) -> i32 {
    let mut inv = 0usize;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Whether μ/ν is a rim hook: connected and free of 2×2 blocks.
pub fn is_rim_hook(mu: &Partition, nu: &Partition) -> bool {
    if !nu.is_contained_in(mu) || nu == mu {
        return false;
    }
    let cells: BTreeSet<(usize, usize)> = mu.cells().into_iter().filter(|&c| !nu.contains(c)).collect();
    let inside = |i: usize, j: usize| cells.contains(&(i, j));
    if cells.iter().any(|&(i, j)| inside(i + 1, j) && inside(i, j + 1) && inside(i + 1, j + 1)) {
        return false;
    }
    let start = *cells.iter().next().unwrap();
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        let mut nb = vec![(i + 1, j), (i, j + 1)];
        if i > 0 {
            nb.push((i - 1, j));
        }
        if j > 0 {
            nb.push((i, j - 1));
        }
        for c in nb {
            if cells.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        }
    }
    seen.len() == cells.len()
}

/// All ν with μ/ν an r-rim-hook, paired with the number of rows it spans.
pub fn removable_rim_hooks(mu: &Partition, r: usize) -> Vec<(Partition, usize)> {
    if r > mu.size() {
        return Vec::new();
    }
    sub_partitions(mu)
        .into_iter()
        .filter(|nu| nu.size() + r == mu.size() && is_rim_hook(mu, nu))
        .map(|nu| {
            let rows = (0..mu.len()).filter(|&j| mu.part(j) > nu.part(j)).count();
            (nu, rows)
        })
        .collect()
}

/// Removes r-rim-hooks in every possible order and returns the terminal
/// partition; panics if two orders disagree.
pub fn rim_hook_core_oracle(mu: &Partition, r: usize) -> Partition {
    fn rec(mu: &Partition, r: usize, memo: &mut HashMap<Partition, Partition>) -> Partition {
        if let Some(c) = memo.get(mu) {
            return c.clone();
        }
        let hooks = removable_rim_hooks(mu, r);
        let res = if hooks.is_empty() {
            mu.clone()
        } else {
            let ends: BTreeSet<Partition> = hooks.iter().map(|(nu, _)| rec(nu, r, memo)).collect();
            assert_eq!(ends.len(), 1, "rim hook removal from {} is order dependent", mu);
            ends.into_iter().next().unwrap()
        };
        memo.insert(mu.clone(), res.clone());
        res
    }
    rec(mu, r, &mut HashMap::new())
}

/// Partitions of `size` with empty r-core.
pub fn empty_core_partitions(r: usize, size: usize) -> Vec<Partition> {
    partitions_of(size)
        .into_iter()
        .filter(|mu| r_core_quotient_sign(mu, r, mu.len()).unwrap().core.is_empty())
        .collect()
}
