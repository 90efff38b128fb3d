use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qtfield::{Mono, QTLaurent};

/// A cell (column, row) with row 0 at the bottom.
pub type Cell = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    Q,
    T,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("parts {:?} are not weakly decreasing", parts)));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Panics on bad input; for literals in code and tests.
    pub fn from(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("not a partition")
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn row(n: usize) -> Self {
        Self::from(&[n])
    }

    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// Comma-separated parts, e.g. "3,1"; "" or "0" is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts: std::result::Result<Vec<usize>, _> = s.split(',').map(|x| x.trim().parse()).collect();
        Self::new(parts.map_err(|_| Error::Parse(format!("malformed partition '{}'", s)))?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// μ_i with 0-based i, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        let parts = (0..w).map(|i| self.parts.iter().filter(|&&p| p > i).count()).collect();
        Partition { parts }
    }

    pub fn contains(&self, (i, j): Cell) -> bool {
        i < self.part(j)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut v = Vec::with_capacity(self.size());
        for (j, &p) in self.parts.iter().enumerate() {
            for i in 0..p {
                v.push((i, j));
            }
        }
        v
    }

    /// Diagram inclusion Y_self ⊆ Y_o.
    pub fn is_contained_in(&self, o: &Partition) -> bool {
        self.len() <= o.len() && self.parts.iter().zip(&o.parts).all(|(a, b)| a <= b)
    }

    pub fn arm_leg_hook(&self, x: Cell) -> Result<(usize, usize, usize)> {
        if !self.contains(x) {
            return Err(Error::Invalid(format!("cell {:?} is not in {}", x, self)));
        }
        let (i, j) = x;
        let a = self.parts[j] - i - 1;
        let l = self.parts.iter().filter(|&&p| p > i).count() - j - 1;
        Ok((a, l, a + l + 1))
    }

    pub fn hooks(&self) -> Vec<usize> {
        self.cells().into_iter().map(|x| self.arm_leg_hook(x).unwrap().2).collect()
    }

    /// n(μ) = Σ (i-1) μ_i.
    pub fn n_stat(&self) -> usize {
        self.parts.iter().enumerate().map(|(i, p)| i * p).sum()
    }

    /// Σ (column - row) over cells, equal to n(μ') - n(μ).
    pub fn content_sum(&self) -> i64 {
        self.cells().iter().map(|&(i, j)| i as i64 - j as i64).sum()
    }

    /// B_μ(q,t) = Σ q^i t^j over cells.
    pub fn b_poly(&self) -> QTLaurent {
        QTLaurent::from_int_terms(
            &self.cells().iter().map(|&(i, j)| (i as i32, j as i32, 1)).collect::<Vec<_>>(),
        )
    }

    /// H_μ(x) = ∏ (1 - x^{h}).
    pub fn hook_poly(&self, var: Var) -> QTLaurent {
        let mut p = QTLaurent::one();
        for h in self.hooks() {
            let m = match var {
                Var::Q => Mono::new(h as i32, 0),
                Var::T => Mono::new(0, h as i32),
            };
            p = p.mul_one_minus(m);
        }
        p
    }

    /// Dominance λ ≤ μ by partial sums.
    pub fn dominance_le(&self, o: &Partition) -> Result<bool> {
        if self.size() != o.size() {
            return Err(Error::Invalid(format!("dominance between {} and {} of different sizes", self, o)));
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(o.len()) {
            a += self.part(i);
            b += o.part(i);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Corners that can be removed, as cells.
    pub fn removable_cells(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&j| self.part(j) > self.part(j + 1))
            .map(|j| (self.parts[j] - 1, j))
            .collect()
    }

    pub fn addable_cells(&self) -> Vec<Cell> {
        (0..=self.len())
            .filter(|&j| j == 0 || self.part(j) < self.part(j - 1))
            .map(|j| (self.part(j), j))
            .collect()
    }

    pub fn remove_cell(&self, (i, j): Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&(i, j)) {
            return Err(Error::Invalid(format!("cell {:?} is not removable from {}", (i, j), self)));
        }
        let mut p = self.parts.clone();
        p[j] -= 1;
        Partition::new(p)
    }

    pub fn add_cell(&self, (i, j): Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&(i, j)) {
            return Err(Error::Invalid(format!("cell {:?} is not addable to {}", (i, j), self)));
        }
        let mut p = self.parts.clone();
        if j == p.len() {
            p.push(0);
        }
        p[j] += 1;
        Partition::new(p)
    }

    /// n! / ∏ h(x).
    pub fn hook_length_count(&self) -> u128 {
        let n = self.size() as u128;
        let fact: u128 = (1..=n).product();
        fact / self.hooks().iter().map(|&h| h as u128).product::<u128>()
    }
}

/// All partitions of n, largest first in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All μ with Y_μ ⊆ Y_λ, in reverse lexicographic order.
pub fn sub_partitions(lambda: &Partition) -> Vec<Partition> {
    fn rec(l: &Partition, j: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if j == l.len() {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        for k in (0..=l.part(j).min(max)).rev() {
            cur.push(k);
            rec(l, j + 1, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(lambda, 0, usize::MAX, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Partition::new(Vec::<usize>::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}
