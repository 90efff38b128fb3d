use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::chars::char_table;
use super::lr::lr_product;
use super::pleth::{pleth_matrix, PlethFactor};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qtfield::{pleth_power, Coeff, QTLaurent, QTRational};

/// A symmetric function Σ c_λ s_λ with coefficients in Q(q,t).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurExpansion {
    coeffs: BTreeMap<Partition, QTRational>,
}

impl SchurExpansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn schur(l: &Partition) -> Self {
        Self::from_map(BTreeMap::from([(l.clone(), QTRational::one())]))
    }

    pub fn from_map(mut coeffs: BTreeMap<Partition, QTRational>) -> Self {
        coeffs.retain(|_, v| !v.is_zero());
        SchurExpansion { coeffs }
    }

    pub fn from_int_map(m: &BTreeMap<Partition, i64>) -> Self {
        Self::from_map(m.iter().map(|(k, v)| (k.clone(), QTRational::from_int(*v))).collect())
    }

    pub fn coeff(&self, l: &Partition) -> QTRational {
        self.coeffs.get(l).cloned().unwrap_or_else(QTRational::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Partition, QTRational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The common size of all keys, if homogeneous and nonzero.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.coeffs.keys().map(|p| p.size());
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn add(&self, o: &SchurExpansion) -> SchurExpansion {
        let mut c = self.coeffs.clone();
        for (k, v) in &o.coeffs {
            let e = c.entry(k.clone()).or_insert_with(QTRational::zero);
            *e = &*e + v;
        }
        Self::from_map(c)
    }

    pub fn sub(&self, o: &SchurExpansion) -> SchurExpansion {
        self.add(&o.scale(&QTRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QTRational) -> SchurExpansion {
        Self::from_map(self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn map_coeffs<F: Fn(&QTRational) -> QTRational>(&self, f: F) -> SchurExpansion {
        Self::from_map(self.coeffs.iter().map(|(k, v)| (k.clone(), f(v))).collect())
    }

    /// Product by the Littlewood–Richardson rule.
    pub fn mul(&self, o: &SchurExpansion) -> SchurExpansion {
        let mut acc: BTreeMap<Partition, Vec<QTRational>> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &o.coeffs {
                let xy = x * y;
                for (l, c) in lr_product(a, b).iter() {
                    acc.entry(l.clone()).or_default().push(xy.scale(&Coeff::from_integer((*c).into())));
                }
            }
        }
        Self::from_map(acc.into_iter().map(|(k, v)| (k, QTRational::sum(&v))).collect())
    }

    /// ⟨f, g⟩ = Σ f_λ g_λ.
    pub fn inner_product(&self, o: &SchurExpansion) -> Result<QTRational> {
        if let (Some(a), Some(b)) = (self.degree(), o.degree()) {
            if a != b {
                return Err(Error::Invalid(format!("inner product of degrees {} and {}", a, b)));
            }
        }
        let terms: Vec<QTRational> =
            self.coeffs.iter().filter_map(|(k, v)| o.coeffs.get(k).map(|w| v * w)).collect();
        Ok(QTRational::sum(&terms))
    }

    /// Coefficients in the power-sum basis: s_λ = Σ_ρ χ^λ(ρ)/z_ρ p_ρ.
    pub fn to_power_sums(&self) -> BTreeMap<Partition, QTRational> {
        let mut acc: BTreeMap<Partition, Vec<QTRational>> = BTreeMap::new();
        for (l, c) in &self.coeffs {
            let t = char_table(l.size());
            let i = t.idx(l);
            for (r, rho) in t.parts.iter().enumerate() {
                let x = t.chi[i][r];
                if x != 0 {
                    acc.entry(rho.clone()).or_default().push(c.scale(&Coeff::new(x.into(), t.z[r].into())));
                }
            }
        }
        acc.into_iter()
            .map(|(k, v)| (k, QTRational::sum(&v)))
            .filter(|(_, v)| !v.is_zero())
            .collect()
    }

    /// Inverse of `to_power_sums`: p_ρ = Σ_λ χ^λ(ρ) s_λ.
    pub fn from_power_sums(p: &BTreeMap<Partition, QTRational>) -> SchurExpansion {
        let mut acc: BTreeMap<Partition, Vec<QTRational>> = BTreeMap::new();
        for (rho, c) in p {
            let t = char_table(rho.size());
            let r = t.idx(rho);
            for (i, l) in t.parts.iter().enumerate() {
                let x = t.chi[i][r];
                if x != 0 {
                    acc.entry(l.clone()).or_default().push(c.scale(&Coeff::from_integer(x.into())));
                }
            }
        }
        Self::from_map(acc.into_iter().map(|(k, v)| (k, QTRational::sum(&v))).collect())
    }

    /// f[E]: p_k ↦ p_k[E].
    pub fn plethysm_alphabet(&self, e: &QTLaurent) -> QTRational {
        let ps = self.to_power_sums();
        let mut powers: BTreeMap<usize, QTLaurent> = BTreeMap::new();
        let mut terms = Vec::with_capacity(ps.len());
        for (rho, c) in &ps {
            let mut prod = QTLaurent::one();
            for &k in rho.parts() {
                let pk = powers.entry(k).or_insert_with(|| pleth_power(k as u32, e));
                prod = &prod * pk;
            }
            terms.push(c.mul_laurent(&prod));
        }
        QTRational::sum(&terms)
    }

    /// f[Z·F] for a multiplicative alphabet factor F.
    pub fn pleth_scale(&self, f: &PlethFactor) -> SchurExpansion {
        let mut acc: BTreeMap<Partition, Vec<QTRational>> = BTreeMap::new();
        for (l, c) in &self.coeffs {
            let t = char_table(l.size());
            let m = pleth_matrix(l.size(), f);
            let i = t.idx(l);
            for (j, nu) in t.parts.iter().enumerate() {
                if !m[i][j].is_zero() {
                    acc.entry(nu.clone()).or_default().push(c * &m[i][j]);
                }
            }
        }
        Self::from_map(acc.into_iter().map(|(k, v)| (k, QTRational::sum(&v))).collect())
    }

    pub fn swap_qt(&self) -> SchurExpansion {
        self.map_coeffs(|c| c.swap_qt())
    }
}

/// s_λ evaluated on the alphabet E.
pub fn schur_at(l: &Partition, e: &QTLaurent) -> QTLaurent {
    SchurExpansion::schur(l)
        .plethysm_alphabet(e)
        .to_laurent()
        .expect("Schur function of a Laurent alphabet is Laurent")
}

#[derive(Serialize, Deserialize)]
struct TermOut {
    partition: Partition,
    coeff: QTRational,
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<TermOut> =
            self.coeffs.iter().map(|(k, c)| TermOut { partition: k.clone(), coeff: c.clone() }).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<TermOut>::deserialize(d)?;
        Ok(Self::from_map(v.into_iter().map(|t| (t.partition, t.coeff)).collect()))
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|(k, v)| format!("({})·s{}", v, k)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
