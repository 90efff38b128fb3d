use std::collections::BTreeMap;

use super::htilde::modified_macdonald;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::qtfield::{Mono, QTLaurent, QTRational};
use crate::symfunc::{PlethFactor, SchurExpansion};

/// J_μ, both in the plain Schur basis and through its coordinates K_{λμ}(q,t)
/// with respect to s_λ[(1−t)Z].
#[derive(Clone, Debug)]
pub struct IntegralForm {
    pub j: SchurExpansion,
    pub k: BTreeMap<Partition, QTRational>,
}

/// K_{λμ}(q,t) = t^{n(μ)} K̃_{λμ}(q, t⁻¹).
pub fn kostka_k(mu: &Partition) -> Result<BTreeMap<Partition, QTRational>> {
    let h = modified_macdonald(mu)?;
    let shift = QTRational::mono(Mono::new(0, mu.n_stat() as i32));
    h.terms()
        .iter()
        .map(|(l, c)| Ok((l.clone(), &c.subst_mono(Mono::q(), Mono::new(0, -1))? * &shift)))
        .collect()
}

pub fn integral_form(mu: &Partition) -> Result<IntegralForm> {
    let k = kostka_k(mu)?;
    let j = SchurExpansion::from_map(k.clone()).pleth_scale(&PlethFactor::one_minus_t());
    Ok(IntegralForm { j, k })
}

/// K_{λμ}(t,t).
pub fn kostka_k_diag(mu: &Partition) -> Result<BTreeMap<Partition, QTLaurent>> {
    kostka_k(mu)?
        .into_iter()
        .map(|(l, c)| {
            let d = c.subst_mono(Mono::t(), Mono::t())?;
            Ok((l, d.to_laurent()?))
        })
        .collect()
}

/// k_{λμ}(q,t) = ⟨H̃_μ[(1−q)Z], s_λ⟩, with the vanishing unless μ ≤ λ enforced.
pub fn k_coeffs(lambda: &Partition, mu: &Partition) -> Result<QTRational> {
    if lambda.size() != mu.size() {
        return Err(Error::Invalid(format!("{} and {} have different sizes", lambda, mu)));
    }
    let v = modified_macdonald(mu)?.pleth_scale(&PlethFactor::one_minus_q()).coeff(lambda);
    if !v.is_zero() && !mu.dominance_le(lambda)? {
        return Err(Error::Internal(format!("k_{{{},{}}} is nonzero off the triangle", lambda, mu)));
    }
    Ok(v)
}

/// ∏_{x} (1 − t^{1+l} q^{−a})(1 − t^{−l} q^{1+a}).
pub fn hook_product_qt(lambda: &Partition) -> QTLaurent {
    let mut p = QTLaurent::one();
    for x in lambda.cells() {
        let (a, l, _) = lambda.arm_leg_hook(x).expect("cell of the diagram");
        let (a, l) = (a as i32, l as i32);
        p = p.mul_one_minus(Mono::new(-a, 1 + l)).mul_one_minus(Mono::new(1 + a, -l));
    }
    p
}
