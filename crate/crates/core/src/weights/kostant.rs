//! Kostant partition functions with per-multiplicity weights.
//!
//! 𝒫(γ) is the coefficient of e^γ in ∏_{α>0} Σ_k c_k e^{kα}; with
//! c_k = h_k(q,t) this is the bivariate function of ∏ 1/((1−qe^α)(1−te^α)),
//! with c_k = t^k the Lusztig t-analogue and with c_k = 1 the classical count.

use std::collections::HashMap;

use super::weight::{RootDataA, Weight};
use crate::qtfield::{Mono, QTLaurent};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KostantKind {
    Classical,
    T,
    QT,
}

impl KostantKind {
    fn coeff(self, k: usize) -> QTLaurent {
        match self {
            KostantKind::Classical => QTLaurent::one(),
            KostantKind::T => QTLaurent::mono(Mono::new(0, k as i32)),
            KostantKind::QT => QTLaurent::from_int_terms(
                &(0..=k as i32).map(|a| (a, k as i32 - a, 1)).collect::<Vec<_>>(),
            ),
        }
    }
}

/// All values 𝒫(γ) for γ in the positive root cone, keyed by simple-root
/// coordinates and bounded componentwise by `cap`.
pub struct KostantTable {
    n: usize,
    table: HashMap<Vec<i64>, QTLaurent>,
}

impl KostantTable {
    pub fn new(n: usize, cap: &[i64], kind: KostantKind) -> Self {
        assert_eq!(cap.len(), n.saturating_sub(1));
        let roots: Vec<Vec<i64>> = RootDataA::new(n)
            .positive_roots()
            .into_iter()
            .map(|(i, j)| (0..n - 1).map(|k| if i <= k && k < j { 1 } else { 0 }).collect())
            .collect();
        // every point of the box, lexicographically increasing
        let mut points: Vec<Vec<i64>> = vec![Vec::new()];
        for &c in cap {
            points = points
                .into_iter()
                .flat_map(|p| {
                    (0..=c.max(-1)).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let mut table: HashMap<Vec<i64>, QTLaurent> = HashMap::new();
        table.insert(vec![0; n.saturating_sub(1)], QTLaurent::one());
        let mut coeffs: Vec<QTLaurent> = vec![QTLaurent::one()];
        for root in &roots {
            let mut next: HashMap<Vec<i64>, QTLaurent> = HashMap::new();
            for p in &points {
                let mut acc = QTLaurent::zero();
                let mut k = 0usize;
                loop {
                    let prev: Vec<i64> = p.iter().zip(root).map(|(a, r)| a - k as i64 * r).collect();
                    if prev.iter().any(|&x| x < 0) {
                        break;
                    }
                    if let Some(v) = table.get(&prev) {
                        while coeffs.len() <= k {
                            coeffs.push(kind.coeff(coeffs.len()));
                        }
                        acc += &(v * &coeffs[k]);
                    }
                    k += 1;
                }
                if !acc.is_zero() {
                    next.insert(p.clone(), acc);
                }
            }
            table = next;
        }
        KostantTable { n, table }
    }

    /// Table covering every γ of height at most h.
    pub fn up_to_height(n: usize, h: i64, kind: KostantKind) -> Self {
        Self::new(n, &vec![h; n.saturating_sub(1)], kind)
    }

    /// 𝒫(γ) for a weight γ; zero outside the cone or the table.
    pub fn get(&self, g: &Weight) -> QTLaurent {
        assert_eq!(g.n(), self.n);
        match g.simple_root_coords() {
            Some(m) => self.table.get(&m).cloned().unwrap_or_else(QTLaurent::zero),
            None => QTLaurent::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (Weight, &QTLaurent)> {
        self.table.iter().map(|(m, v)| (Weight::from_simple_root_coords(m), v))
    }
}

/// Single value 𝒫(γ).
pub fn kostant(g: &Weight, kind: KostantKind) -> QTLaurent {
    match g.simple_root_coords() {
        Some(m) if m.iter().all(|&x| x >= 0) => KostantTable::new(g.n(), &m, kind).get(g),
        _ => QTLaurent::zero(),
    }
}
