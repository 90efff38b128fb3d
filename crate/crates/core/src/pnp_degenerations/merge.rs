use std::collections::{BTreeSet, HashMap, VecDeque};

use rayon::prelude::*;
use serde::Serialize;

use super::config::{bond_list, Bond, CutConfig};
use crate::error::{Error, Result};
use crate::partitions::Partition;

type Point = (i64, i64);

/// A maximal run of cut edges on the boundary of the first piece, between two
/// consecutive points where the boundary meets another line or the border.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub start: Point,
    pub end: Point,
    pub cuts: Vec<Bond>,
    /// index into `pieces()` of the piece on the far side
    pub neighbor: usize,
}

/// The unit edge separating the two cells of a bond.
fn wall((a, b): Bond) -> (Point, Point) {
    let ((c, r), (c2, _)) = (a, b);
    let (c, r) = (c as i64, r as i64);
    if c2 as i64 == c + 1 {
        ((c + 1, r), (c + 1, r + 1))
    } else {
        ((c, r + 1), (c + 1, r + 1))
    }
}

fn on_border(shape: &Partition, (x, y): Point) -> bool {
    if x == 0 || y == 0 {
        return true;
    }
    let (x, y) = (x as usize, y as usize);
    !(shape.contains((x - 1, y - 1)) && shape.contains((x, y - 1)) && shape.contains((x - 1, y)) && shape.contains((x, y)))
}

/// Boundary segments of the piece holding (0,0), ordered from the left side
/// of the diagram to the bottom.
pub fn boundary_segments(c: &CutConfig) -> Result<Vec<Segment>> {
    let pieces = c.pieces()?;
    let mut label = HashMap::new();
    for (i, p) in pieces.iter().enumerate() {
        for &x in p {
            label.insert(x, i);
        }
    }
    let list = bond_list(&c.shape);
    let cuts: Vec<Bond> = list.iter().enumerate().filter(|(i, _)| c.bonds >> i & 1 == 0).map(|(_, b)| *b).collect();
    let mut degree: HashMap<Point, usize> = HashMap::new();
    for &b in &cuts {
        let (p, q) = wall(b);
        *degree.entry(p).or_insert(0) += 1;
        *degree.entry(q).or_insert(0) += 1;
    }
    let is_node = |p: Point| on_border(&c.shape, p) || degree[&p] != 2;

    let edge: Vec<Bond> = cuts.into_iter().filter(|(a, b)| (label[a] == 0) != (label[b] == 0)).collect();
    let mut at: HashMap<Point, Vec<usize>> = HashMap::new();
    for (i, &b) in edge.iter().enumerate() {
        let (p, q) = wall(b);
        at.entry(p).or_default().push(i);
        at.entry(q).or_default().push(i);
    }
    let mut seen = vec![false; edge.len()];
    let mut out = Vec::new();
    for s in 0..edge.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut run = vec![s];
        let mut ends = Vec::new();
        let mut queue = VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            let (p, q) = wall(edge[i]);
            for v in [p, q] {
                if is_node(v) {
                    ends.push(v);
                    continue;
                }
                for &j in &at[&v] {
                    if !seen[j] {
                        seen[j] = true;
                        run.push(j);
                        queue.push_back(j);
                    }
                }
            }
        }
        let far: BTreeSet<usize> = run
            .iter()
            .map(|&i| {
                let (a, b) = edge[i];
                if label[&a] == 0 {
                    label[&b]
                } else {
                    label[&a]
                }
            })
            .collect();
        if far.len() != 1 {
            return Err(Error::Internal("boundary segment borders several pieces".into()));
        }
        // the boundary of a straight shape is a staircase on which x − y increases
        ends.sort_by_key(|&(x, y)| (x - y, x));
        let (start, end) = match (ends.first(), ends.last()) {
            (Some(&a), Some(&b)) => (a, b),
            _ => return Err(Error::Internal("closed boundary segment".into())),
        };
        let mut cuts: Vec<Bond> = run.iter().map(|&i| edge[i]).collect();
        cuts.sort();
        out.push(Segment { start, end, cuts, neighbor: *far.iter().next().unwrap() });
    }
    out.sort_by_key(|s| (s.start.0 - s.start.1, s.start.0));
    Ok(out)
}

/// Admissible configurations obtained by restoring one boundary segment of the
/// first piece, which then absorbs exactly one other piece.
pub fn merge_moves(c: &CutConfig) -> Result<Vec<CutConfig>> {
    let m = c.pieces()?.len();
    if m == 1 {
        return Err(Error::Invalid("nothing to merge".into()));
    }
    let list = bond_list(&c.shape);
    let mut out = BTreeSet::new();
    for seg in boundary_segments(c)? {
        let mut mask = c.bonds;
        for b in &seg.cuts {
            mask |= 1 << list.iter().position(|x| x == b).unwrap();
        }
        let next = CutConfig::new(c.shape.clone(), mask)?;
        if next.is_admissible() && next.pieces()?.len() == m - 1 {
            out.insert(next);
        }
    }
    Ok(out.into_iter().collect())
}

/// All admissible configurations of a shape, with merge moves as edges.
#[derive(Clone, Debug, Serialize)]
pub struct MergeGraph {
    pub shape: Partition,
    pub bonds: Vec<Bond>,
    /// bond masks, ascending
    pub nodes: Vec<u64>,
    pub pieces: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

pub const MERGE_BOND_CAP: usize = 24;

pub fn merge_graph(shape: &Partition) -> Result<MergeGraph> {
    let bonds = bond_list(shape);
    if bonds.len() > MERGE_BOND_CAP {
        return Err(Error::Domain(format!("{} has {} bonds; exhaustive search allows {}", shape, bonds.len(), MERGE_BOND_CAP)));
    }
    let nodes: Vec<u64> = (0..1u64 << bonds.len())
        .into_par_iter()
        .filter(|&m| CutConfig { shape: shape.clone(), bonds: m }.is_admissible())
        .collect();
    let index: HashMap<u64, usize> = nodes.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let per_node = nodes
        .par_iter()
        .map(|&m| {
            let c = CutConfig { shape: shape.clone(), bonds: m };
            let k = c.pieces()?.len();
            let targets = if k > 1 { merge_moves(&c)?.into_iter().map(|t| index[&t.bonds]).collect() } else { Vec::new() };
            Ok((k, targets))
        })
        .collect::<Result<Vec<(usize, Vec<usize>)>>>()?;
    let mut pieces = Vec::with_capacity(nodes.len());
    let mut edges = Vec::new();
    for (i, (k, ts)) in per_node.into_iter().enumerate() {
        pieces.push(k);
        edges.extend(ts.into_iter().map(|j| (i, j)));
    }
    Ok(MergeGraph { shape: shape.clone(), bonds, nodes, pieces, edges })
}

impl MergeGraph {
    /// Every configuration reaches the one-piece configuration.
    pub fn connected_to_full(&self) -> bool {
        let full = (1u64 << self.bonds.len()) - 1;
        let Ok(target) = self.nodes.binary_search(&full) else { return false };
        let mut rev: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        for &(a, b) in &self.edges {
            rev[b].push(a);
        }
        let mut seen = vec![false; self.nodes.len()];
        seen[target] = true;
        let mut queue = VecDeque::from([target]);
        while let Some(v) = queue.pop_front() {
            for &u in &rev[v] {
                if !seen[u] {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Nodes with more than one piece and no outgoing merge.
    pub fn stuck(&self) -> Vec<u64> {
        let mut has_out = vec![false; self.nodes.len()];
        for &(a, _) in &self.edges {
            has_out[a] = true;
        }
        (0..self.nodes.len()).filter(|&i| self.pieces[i] > 1 && !has_out[i]).map(|i| self.nodes[i]).collect()
    }
}

pub fn degeneration_connected(shape: &Partition) -> Result<bool> {
    Ok(merge_graph(shape)?.connected_to_full())
}
