use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// Two cells of the diagram, right or upper neighbour second.
pub type Bond = (Cell, Cell);

/// Every pair of horizontally or vertically adjacent cells of Y_μ, in a fixed
/// order that defines the bit positions of `CutConfig::bonds`.
pub fn bond_list(shape: &Partition) -> Vec<Bond> {
    let mut out = Vec::new();
    for (c, r) in shape.cells() {
        if shape.contains((c + 1, r)) {
            out.push(((c, r), (c + 1, r)));
        }
        if shape.contains((c, r + 1)) {
            out.push(((c, r), (c, r + 1)));
        }
    }
    out
}

/// Present bonds on one unit square with corners BL, BR, TL, TR.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SquareBonds {
    pub bl_tl: bool,
    pub tl_tr: bool,
    pub bl_br: bool,
    pub br_tr: bool,
}

/// The two paths BL→TL→TR and BL→BR→TR come from x₂x₁ and x₁x₂ and must
/// vanish together.
pub fn square_allowed(s: SquareBonds) -> bool {
    (s.bl_tl && s.tl_tr) == (s.bl_br && s.br_tr)
}

/// A configuration, stored as the set of present bonds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CutConfig {
    pub shape: Partition,
    /// bit i set iff `bond_list(shape)[i]` is present
    pub bonds: u64,
}

impl CutConfig {
    pub fn new(shape: Partition, bonds: u64) -> Result<Self> {
        let k = bond_list(&shape).len();
        if k > 63 {
            return Err(Error::Domain(format!("{} has too many bonds", shape)));
        }
        if bonds >> k != 0 {
            return Err(Error::Invalid(format!("bond mask {:#b} exceeds the {} bonds of {}", bonds, k, shape)));
        }
        Ok(CutConfig { shape, bonds })
    }

    pub fn full(shape: &Partition) -> Self {
        let k = bond_list(shape).len();
        CutConfig { shape: shape.clone(), bonds: (1u64 << k) - 1 }
    }

    pub fn empty(shape: &Partition) -> Self {
        CutConfig { shape: shape.clone(), bonds: 0 }
    }

    pub fn from_bonds(shape: &Partition, present: &[Bond]) -> Result<Self> {
        let list = bond_list(shape);
        let mut mask = 0u64;
        for &(a, b) in present {
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            let Some(i) = list.iter().position(|&x| x == (a, b) || x == (b, a)) else {
                return Err(Error::Invalid(format!("{:?}–{:?} is not a bond of {}", a, b, shape)));
            };
            mask |= 1 << i;
        }
        Self::new(shape.clone(), mask)
    }

    /// Bonds are all adjacencies inside the given pieces.
    pub fn from_pieces(shape: &Partition, pieces: &[Vec<Cell>]) -> Result<Self> {
        let mut label = HashMap::new();
        for (i, p) in pieces.iter().enumerate() {
            for &x in p {
                if !shape.contains(x) || label.insert(x, i).is_some() {
                    return Err(Error::Invalid(format!("{:?} is outside {} or repeated", x, shape)));
                }
            }
        }
        if label.len() != shape.size() {
            return Err(Error::Invalid("pieces do not cover the diagram".into()));
        }
        let mut mask = 0u64;
        for (i, (a, b)) in bond_list(shape).into_iter().enumerate() {
            if label[&a] == label[&b] {
                mask |= 1 << i;
            }
        }
        Self::new(shape.clone(), mask)
    }

    pub fn has_bond(&self, a: Cell, b: Cell) -> bool {
        bond_list(&self.shape)
            .iter()
            .position(|&x| x == (a, b) || x == (b, a))
            .is_some_and(|i| self.bonds >> i & 1 == 1)
    }

    pub fn present(&self) -> Vec<Bond> {
        bond_list(&self.shape).into_iter().enumerate().filter(|(i, _)| self.bonds >> i & 1 == 1).map(|(_, b)| b).collect()
    }

    /// Connected components of the bond graph, each sorted, (0,0)'s first and
    /// the rest by smallest cell.
    pub(crate) fn components(&self) -> Vec<Vec<Cell>> {
        let cells = self.shape.cells();
        let mut adj: HashMap<Cell, Vec<Cell>> = HashMap::new();
        for (a, b) in self.present() {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut start: Vec<Cell> = cells.clone();
        start.sort();
        for s in start {
            if !seen.insert(s) {
                continue;
            }
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in adj.get(&x).into_iter().flatten() {
                    if seen.insert(y) {
                        comp.push(y);
                        queue.push_back(y);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Admissible: pieces are skew shapes, every adjacency inside a piece is
    /// bonded, and every unit square of Y_μ passes the local rule.
    pub fn is_admissible(&self) -> bool {
        let comps = self.components();
        let mut label = HashMap::new();
        for (i, c) in comps.iter().enumerate() {
            for &x in c {
                label.insert(x, i);
            }
        }
        for (i, (a, b)) in bond_list(&self.shape).into_iter().enumerate() {
            if self.bonds >> i & 1 == 0 && label[&a] == label[&b] {
                return false;
            }
        }
        if !comps.iter().all(|c| is_skew(c)) {
            return false;
        }
        for (c, r) in self.shape.cells() {
            if !self.shape.contains((c + 1, r + 1)) {
                continue;
            }
            let s = SquareBonds {
                bl_tl: self.has_bond((c, r), (c, r + 1)),
                tl_tr: self.has_bond((c, r + 1), (c + 1, r + 1)),
                bl_br: self.has_bond((c, r), (c + 1, r)),
                br_tr: self.has_bond((c + 1, r), (c + 1, r + 1)),
            };
            if !square_allowed(s) {
                return false;
            }
        }
        true
    }

    /// The pieces, the one holding (0,0) first.
    pub fn pieces(&self) -> Result<Vec<Vec<Cell>>> {
        if !self.is_admissible() {
            return Err(Error::Invalid(format!("configuration {:#b} on {} is not admissible", self.bonds, self.shape)));
        }
        Ok(self.components())
    }
}

/// Rows contiguous, with left and right ends weakly decreasing upwards.
fn is_skew(cells: &[Cell]) -> bool {
    let mut rows: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for &(c, r) in cells {
        rows.entry(r).or_default().push(c);
    }
    let mut prev: Option<(usize, usize, usize)> = None;
    for (r, mut cs) in rows {
        cs.sort_unstable();
        let (lo, hi) = (cs[0], *cs.last().unwrap());
        if hi - lo + 1 != cs.len() {
            return false;
        }
        if let Some((pr, plo, phi)) = prev {
            if pr + 1 != r || lo > plo || hi > phi {
                return false;
            }
        }
        prev = Some((r, lo, hi));
    }
    true
}
