use serde::Serialize;

use super::partition::{Cell, Partition};

/// A standard Young tableau; `rows[j][i]` is the entry in column i of row j
/// (row 0 at the bottom).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StandardTableau {
    #[serde(skip)]
    shape: Partition,
    rows: Vec<Vec<usize>>,
    #[serde(skip)]
    pos: Vec<Cell>,
}

impl StandardTableau {
    /// From the sequence of cells filled by 1, 2, …, n.
    pub fn from_cells(shape: &Partition, cells: &[Cell]) -> Self {
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (k, &(i, j)) in cells.iter().enumerate() {
            rows[j][i] = k + 1;
        }
        StandardTableau { shape: shape.clone(), rows, pos: cells.to_vec() }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.pos.len()
    }

    /// The cell (c_σ(k), r_σ(k)) holding k, 1-based.
    pub fn cell_of(&self, k: usize) -> Cell {
        self.pos[k - 1]
    }

    /// σ(k): the shape filled by 1..k.
    pub fn sub_shape(&self, k: usize) -> Partition {
        let mut parts = vec![0usize; self.shape.len()];
        for &(_, j) in &self.pos[..k] {
            parts[j] += 1;
        }
        Partition::new(parts).expect("standard tableau prefix is a partition")
    }

    /// σ(0) ⊂ σ(1) ⊂ … ⊂ σ(n).
    pub fn chain(&self) -> Vec<Partition> {
        (0..=self.size()).map(|k| self.sub_shape(k)).collect()
    }

    /// Rows bottom-up, left to right.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let ok_rows = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let ok_cols = self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(up, down)| up > down));
        ok_rows && ok_cols
    }
}

/// All standard tableaux of shape μ, sorted by reading word.
pub fn syt_enumerate(mu: &Partition) -> Vec<StandardTableau> {
    fn rec(mu: &Partition, cur: &Partition, cells: &mut Vec<Cell>, out: &mut Vec<StandardTableau>) {
        if cur == mu {
            out.push(StandardTableau::from_cells(mu, cells));
            return;
        }
        for c in cur.addable_cells() {
            if mu.contains(c) {
                let next = cur.add_cell(c).unwrap();
                cells.push(c);
                rec(mu, &next, cells, out);
                cells.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(mu, &Partition::empty(), &mut Vec::new(), &mut out);
    out.sort_by_key(|t| t.reading_word());
    assert_eq!(out.len() as u128, mu.hook_length_count(), "SYT count disagrees with the hook length formula");
    out
}
