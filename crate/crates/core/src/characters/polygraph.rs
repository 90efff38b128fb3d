//! Isotypic characters built from transformed Macdonald polynomials.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::macdonald::{hook_product_qt, k_coeffs, modified_macdonald};
use crate::partitions::{partitions_of, Partition, Var};
use crate::qtfield::{series_expand, Mono, QTLaurent, QTRational, QTSeries};
use crate::symfunc::{schur_at, SchurExpansion};
use crate::weights::{phi, star, Weight};

/// 1 / ∏_{x∈ν} (1 − t^{1+l} q^{−a})(1 − t^{−l} q^{1+a}).
fn inv_hooks(nu: &Partition) -> QTRational {
    QTRational::from_laurent(hook_product_qt(nu)).inv().expect("nonzero hook product")
}

/// Φ_μ[E] = Σ_κ φ(μ)_κ s_κ[E].
pub fn phi_at(mu: &Partition, n: usize, e: &QTLaurent) -> Result<QTLaurent> {
    let mut acc = QTLaurent::zero();
    for (kappa, c) in phi(mu, n)? {
        acc += &schur_at(&kappa, e).scale_int(c);
    }
    Ok(acc)
}

fn check_length(mu: &Partition, n: usize) -> Result<()> {
    if mu.len() >= n {
        return Err(Error::Invalid(format!("{} needs at most {} parts", mu, n - 1)));
    }
    Ok(())
}

/// Per-irreducible character of the polygraph module, exact and truncated.
#[derive(Clone, Debug, Serialize)]
pub struct PolygraphCharacter {
    pub exact: SchurExpansion,
    #[serde(serialize_with = "truncated_entries")]
    pub truncated: BTreeMap<Partition, QTSeries>,
}

#[derive(Serialize)]
struct SeriesEntry<'a> {
    partition: &'a Partition,
    series: &'a QTSeries,
}

fn truncated_entries<S: serde::Serializer>(m: &BTreeMap<Partition, QTSeries>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(m.iter().map(|(partition, series)| SeriesEntry { partition, series }))
}

/// Coefficient of χ_λ: Σ_ν s_μ[B_ν] K̃_{λν} / hooks(ν).
pub fn polygraph_character(n: usize, mu: &Partition, bound: i64) -> Result<PolygraphCharacter> {
    let nus = partitions_of(n);
    let weights: Vec<(Partition, QTRational)> = nus
        .par_iter()
        .map(|nu| {
            let s = schur_at(mu, &nu.b_poly());
            Ok((nu.clone(), inv_hooks(nu).mul_laurent(&s)))
        })
        .collect::<Result<_>>()?;
    let mut exact = BTreeMap::new();
    for lam in partitions_of(n) {
        let mut terms = Vec::new();
        for (nu, w) in &weights {
            let k = modified_macdonald(nu)?.coeff(&lam);
            if !k.is_zero() && !w.is_zero() {
                terms.push(w * &k);
            }
        }
        exact.insert(lam, QTRational::sum(&terms));
    }
    let exact = SchurExpansion::from_map(exact);
    let truncated = exact
        .terms()
        .iter()
        .map(|(l, c)| Ok((l.clone(), series_expand(c, bound)?)))
        .collect::<Result<_>>()?;
    Ok(PolygraphCharacter { exact, truncated })
}

/// b_{μ⋆,λ}(q,t) = Σ_ν Φ_μ[B_ν] K̃_{λν} / hooks(ν).
pub fn b_coeff(mu: &Partition, lambda: &Partition) -> Result<QTRational> {
    let n = lambda.size();
    check_length(mu, n)?;
    let terms = partitions_of(n)
        .par_iter()
        .map(|nu| {
            let ph = phi_at(mu, n, &nu.b_poly())?;
            let k = modified_macdonald(nu)?.coeff(lambda);
            Ok(&inv_hooks(nu).mul_laurent(&ph) * &k)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QTRational::sum(&terms))
}

/// Isotypic characters of R, keyed by dominant weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GCharacterExpansion {
    pub kind: CharacterKind,
    #[serde(serialize_with = "crate::weights::weight_entries")]
    pub coeffs: BTreeMap<Weight, QTRational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CharacterKind {
    FiberCharacter,
    GlobalSections,
}

/// All b_{μ⋆,λ} with |μ| ≤ max_size, keyed by μ⋆.
pub fn b_isotypic(lambda: &Partition, max_size: usize) -> Result<GCharacterExpansion> {
    let n = lambda.size();
    let mut coeffs = BTreeMap::new();
    for m in 0..=max_size {
        for mu in partitions_of(m).into_iter().filter(|p| p.len() < n) {
            let b = b_coeff(&mu, lambda)?;
            if !b.is_zero() {
                coeffs.insert(star(&mu, n)?, b);
            }
        }
    }
    Ok(GCharacterExpansion { kind: CharacterKind::GlobalSections, coeffs })
}

/// Σ_{ν ≤ λ} Φ_μ[B_ν] k_{λν} / hooks(ν).
pub fn rnil_isotypic(mu: &Partition, lambda: &Partition) -> Result<QTRational> {
    let n = lambda.size();
    check_length(mu, n)?;
    let mut terms = Vec::new();
    for nu in partitions_of(n) {
        if !nu.dominance_le(lambda)? {
            continue;
        }
        let k = k_coeffs(lambda, &nu)?;
        if k.is_zero() {
            continue;
        }
        let ph = phi_at(mu, n, &nu.b_poly())?;
        terms.push(&inv_hooks(&nu).mul_laurent(&ph) * &k);
    }
    Ok(QTRational::sum(&terms))
}

/// q^{−n(λ)} Φ_μ[B_λ(q,q⁻¹)] / H_λ(q⁻¹).
pub fn rnil_specialized(mu: &Partition, lambda: &Partition) -> Result<QTRational> {
    let n = lambda.size();
    check_length(mu, n)?;
    let b = lambda.b_poly().subst_mono(Mono::q(), Mono::new(-1, 0))?;
    let ph = phi_at(mu, n, &b)?;
    let h = lambda.hook_poly(Var::Q).map_monos(|m| m.inv());
    let num = ph.mul_mono(Mono::new(-(lambda.n_stat() as i32), 0));
    QTRational::from_laurent(num).div_ref(&QTRational::from_laurent(h))
}

/// Σ_λ q^{−n(λ)} H_λ(q⁻¹)⁻¹ χ_λ, the graded isotypic multiplicities of the
/// polynomial functions on the Cartan with generators in degree −1.
pub fn fake_degree_character(n: usize) -> BTreeMap<Partition, QTRational> {
    partitions_of(n)
        .into_iter()
        .map(|l| {
            let h = l.hook_poly(Var::Q).map_monos(|m| m.inv());
            let v = QTRational::mono(Mono::new(-(l.n_stat() as i32), 0))
                .div_ref(&QTRational::from_laurent(h))
                .unwrap();
            (l, v)
        })
        .collect()
}
