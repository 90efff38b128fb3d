use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{permutation_sign, Partition};

/// An integral GL_n weight.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    n: usize,
    coords: Vec<i64>,
}

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { n: coords.len(), coords }
    }

    pub fn from(c: &[i64]) -> Self {
        Self::new(c.to_vec())
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    /// A partition padded with zeros to length n.
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        if p.len() > n {
            return Err(Error::Invalid(format!("{} has more than {} parts", p, n)));
        }
        Ok(Self::new((0..n).map(|i| p.part(i) as i64).collect()))
    }

    /// Comma-separated integers.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: std::result::Result<Vec<i64>, _> = s.split(',').map(|x| x.trim().parse()).collect();
        Ok(Self::new(v.map_err(|_| Error::Parse(format!("malformed weight '{}'", s)))?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> i64 {
        self.coords[i]
    }

    /// Σ coordinates.
    pub fn size(&self) -> i64 {
        self.coords.iter().sum()
    }

    /// Σ of positive coordinates.
    pub fn positive_size(&self) -> i64 {
        self.coords.iter().filter(|&&x| x > 0).sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.coords.windows(2).all(|w| w[0] >= w[1])
    }

    /// Nonnegative partition as a Partition, if it is one.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_dominant() || self.coords.iter().any(|&x| x < 0) {
            return None;
        }
        Partition::new(self.coords.iter().map(|&x| x as usize).collect()).ok()
    }

    /// The staircase ρ' = (n-1, …, 0); it differs from ρ by a W-invariant shift.
    pub fn rho(n: usize) -> Self {
        Self::new((0..n).map(|i| (n - 1 - i) as i64).collect())
    }

    /// −w₀: reverse and negate.
    pub fn neg_w0(&self) -> Self {
        Self::new(self.coords.iter().rev().map(|x| -x).collect())
    }

    pub fn permute(&self, w: &[usize]) -> Self {
        // (w·λ)_{w(i)} = λ_i
        let mut c = vec![0; self.n];
        for (i, &wi) in w.iter().enumerate() {
            c[wi] = self.coords[i];
        }
        Self::new(c)
    }

    /// Coordinates in simple roots, if the weight lies in the root lattice.
    pub fn simple_root_coords(&self) -> Option<Vec<i64>> {
        if self.size() != 0 {
            return None;
        }
        let mut acc = 0;
        Some(self.coords[..self.n.saturating_sub(1)].iter().map(|x| {
            acc += x;
            acc
        }).collect())
    }

    pub fn from_simple_root_coords(m: &[i64]) -> Self {
        let n = m.len() + 1;
        let mut c = vec![0; n];
        for (i, &mi) in m.iter().enumerate() {
            c[i] += mi;
            c[i + 1] -= mi;
        }
        Self::new(c)
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        assert_eq!(self.n, o.n, "rank mismatch");
        Weight::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        assert_eq!(self.n, o.n, "rank mismatch");
        Weight::new(self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Sorts coordinates decreasingly. The sign is that of the permutation
/// sorting λ+ρ, and 0 when λ+ρ has a repeated entry.
pub fn dominant_rep(l: &Weight) -> (Weight, i32) {
    let mut c = l.coords.clone();
    c.sort_unstable_by(|a, b| b.cmp(a));
    let shifted = l + &Weight::rho(l.n);
    let sign = sort_sign(&shifted.coords).map_or(0, |(_, s)| s);
    (Weight::new(c), sign)
}

/// For a vector with distinct entries, the decreasing sort and the sign of
/// the sorting permutation; None on repeats.
pub fn sort_sign(v: &[i64]) -> Option<(Vec<i64>, i32)> {
    let mut idx: Vec<usize> = (0..v.len()).collect();
    idx.sort_by(|&a, &b| v[b].cmp(&v[a]));
    if idx.windows(2).any(|w| v[w[0]] == v[w[1]]) {
        return None;
    }
    Some((idx.iter().map(|&i| v[i]).collect(), permutation_sign(&idx)))
}

/// Dot action: the dominant w·λ = w(λ+ρ) − ρ with its sign, or None when
/// λ+ρ is singular. This is the rule J(e^{λ+ρ}) / J(e^ρ) = ε · s_{w·λ}.
pub fn dot_dominant(l: &Weight) -> Option<(Weight, i32)> {
    let rho = Weight::rho(l.n);
    let (sorted, s) = sort_sign(&(l + &rho).coords)?;
    Some((&Weight::new(sorted) - &rho, s))
}

/// All permutations of 0..n in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let mut i = n;
        while i > 1 && p[i - 2] >= p[i - 1] {
            i -= 1;
        }
        if i <= 1 {
            break;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 2] {
            j -= 1;
        }
        p.swap(i - 2, j);
        p[i - 1..].reverse();
    }
    out
}

/// Type A_{n-1} root data: positive roots e_i − e_j, i < j.
#[derive(Clone, Debug)]
pub struct RootDataA {
    pub n: usize,
}

impl RootDataA {
    pub fn new(n: usize) -> Self {
        RootDataA { n }
    }

    pub fn positive_roots(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                v.push((i, j));
            }
        }
        v
    }

    pub fn num_positive(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// 2ρ = Σ_{α>0} α.
    pub fn rho_doubled(&self) -> Weight {
        Weight::new((0..self.n).map(|i| self.n as i64 - 1 - 2 * i as i64).collect())
    }

    pub fn root(&self, (i, j): (usize, usize)) -> Weight {
        let mut c = vec![0; self.n];
        c[i] = 1;
        c[j] = -1;
        Weight::new(c)
    }

    /// Number of positive roots sent to negative roots by w.
    pub fn length(&self, w: &[usize]) -> usize {
        self.positive_roots().into_iter().filter(|&(i, j)| w[i] > w[j]).count()
    }
}

#[derive(Serialize)]
struct WeightEntry<'a, V> {
    weight: &'a Weight,
    coeff: &'a V,
}

/// Serializes a weight-keyed map as a list of {"weight", "coeff"} (JSON keys must be strings).
pub fn weight_entries<V: Serialize, S: serde::Serializer>(
    m: &std::collections::BTreeMap<Weight, V>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|(weight, coeff)| WeightEntry { weight, coeff }))
}
