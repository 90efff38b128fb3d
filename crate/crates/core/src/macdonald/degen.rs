//! Degenerate Macdonald polynomials over GL_n root data.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qtfield::{Mono, QTLaurent};
use crate::weights::{sort_sign, RootDataA, Weight};

pub const DEGEN_RANK_CAP: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegenVariant {
    /// J(e^{λ+ρ} ∏ (1 − t e^{−α})) / J(e^ρ)
    Plain,
    /// J(e^{λ+ρ} ∏ (1 − t e^{α})) / J(e^ρ)
    Tilde,
}

/// Schur expansion of P_λ(t) or P̃_λ(t) keyed by dominant weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegenMacExpansion {
    pub lambda: Weight,
    #[serde(serialize_with = "crate::weights::weight_entries")]
    pub coeffs: BTreeMap<Weight, QTLaurent>,
}

impl DegenMacExpansion {
    pub fn coeff(&self, mu: &Weight) -> QTLaurent {
        self.coeffs.get(mu).cloned().unwrap_or_else(QTLaurent::zero)
    }
}

pub fn degen_macdonald(lambda: &Weight, variant: DegenVariant) -> Result<DegenMacExpansion> {
    let n = lambda.n();
    if n > DEGEN_RANK_CAP {
        return Err(Error::Invalid(format!("rank {} exceeds the cap {}", n, DEGEN_RANK_CAP)));
    }
    let rho = Weight::rho(n);
    let minus_t = QTLaurent::mono(Mono::t()).scale_int(-1);
    // e^{λ+ρ} times the root product, collected by exponent
    let mut terms: HashMap<Vec<i64>, QTLaurent> = HashMap::from([((lambda + &rho).coords().to_vec(), QTLaurent::one())]);
    for (i, j) in RootDataA::new(n).positive_roots() {
        let sign: i64 = match variant {
            DegenVariant::Plain => -1,
            DegenVariant::Tilde => 1,
        };
        let mut next = terms.clone();
        for (v, c) in &terms {
            let mut w = v.clone();
            w[i] += sign;
            w[j] -= sign;
            let e = next.entry(w).or_insert_with(QTLaurent::zero);
            *e += &(c * &minus_t);
        }
        next.retain(|_, c| !c.is_zero());
        terms = next;
    }
    // J(e^β)/J(e^ρ) = ± s_{sort(β) − ρ}
    let mut coeffs: BTreeMap<Weight, QTLaurent> = BTreeMap::new();
    for (v, c) in terms {
        if let Some((sorted, sgn)) = sort_sign(&v) {
            let mu = &Weight::new(sorted) - &rho;
            let e = coeffs.entry(mu).or_insert_with(QTLaurent::zero);
            *e += &c.scale_int(sgn as i64);
        }
    }
    coeffs.retain(|_, c| !c.is_zero());
    Ok(DegenMacExpansion { lambda: lambda.clone(), coeffs })
}

/// ã_{λμ}(t) read off the tilde expansion.
pub fn a_tilde(lambda: &Weight, mu: &Weight) -> Result<QTLaurent> {
    Ok(degen_macdonald(lambda, DegenVariant::Tilde)?.coeff(mu))
}
