use serde::Serialize;

use super::gpoly::{script_g, t_power};
use crate::characters::phi_at;
use crate::error::{Error, Result};
use crate::macdonald::lusztig_t_analog;
use crate::partitions::{Partition, Var};
use crate::qtfield::{Mono, QTLaurent, QTRational};
use crate::weights::{dagger, star, Weight};
use num_rational::Ratio;

/// Both sides of an identity, kept for reporting.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentitySides {
    pub lhs: QTRational,
    pub rhs: QTRational,
}

impl IdentitySides {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn one_plus_to(n: usize) -> QTLaurent {
    let mut s = QTLaurent::zero();
    for i in 0..n as i32 {
        s += &QTLaurent::mono(Mono::new(0, i));
    }
    s
}

fn t_to_inv_q(r: &QTRational) -> Result<QTRational> {
    r.subst_mono(Mono::q(), Mono::new(-1, 0))
}

/// 𝒢((1ⁿ), μ†; t) against t^{n²/2} K_{μ,0}(t) / ∏_{i≤n}(1 − tⁱ), μ ∈ Q⁺_n.
pub fn hesselink_sides(mu: &Weight) -> Result<IdentitySides> {
    let n = mu.n();
    if mu.size() != 0 || !mu.is_dominant() {
        return Err(Error::Invalid(format!("{} is not a dominant element of the root lattice", mu)));
    }
    let nu = dagger(mu).to_partition().ok_or_else(|| Error::Internal("dagger is not a partition".into()))?;
    let lhs = script_g(&Partition::column(n), &nu)?;
    let k = lusztig_t_analog(mu, &Weight::zero(n))?;
    let num = k.mul_mono(t_power(Ratio::new((n * n) as i64, 2))?);
    let rhs = QTRational::from_laurent(num).div_ref(&QTRational::from_laurent(Partition::column(n).hook_poly(Var::T)))?;
    Ok(IdentitySides { lhs, rhs })
}

pub fn hesselink_check(mu: &Weight) -> Result<bool> {
    Ok(hesselink_sides(mu)?.holds())
}

/// The two identities relating Φ_μ to 𝒢 and to K_{μ⋆,0}.
///
/// First: Φ_μ[B_λ(q,q⁻¹)] = q^{n/2 + n(λ)} H_λ(q⁻¹) 𝒢(λ,(μ⋆)†;q⁻¹).
/// Second: K_{μ⋆,0}(t) = Φ_μ[(1 − tⁿ)/(1 − t)].
pub fn thm_identities_check(n: usize, mu: &Partition, lambda: &Partition) -> Result<(IdentitySides, IdentitySides)> {
    if lambda.size() != n {
        return Err(Error::Invalid(format!("{} is not a partition of {}", lambda, n)));
    }
    let ms = star(mu, n)?;
    let nu = dagger(&ms).to_partition().ok_or_else(|| Error::Internal("dagger is not a partition".into()))?;

    let b = lambda.b_poly().subst_mono(Mono::q(), Mono::new(-1, 0))?;
    let lhs1 = QTRational::from_laurent(phi_at(mu, n, &b)?);
    let g = t_to_inv_q(&script_g(lambda, &nu)?)?;
    let h = lambda.hook_poly(Var::Q).map_monos(|m| m.inv());
    let shift = Mono::doubled(n as i32 + 2 * lambda.n_stat() as i32, 0);
    let rhs1 = g.mul_laurent(&h.mul_mono(shift));

    let lhs2 = QTRational::from_laurent(lusztig_t_analog(&ms, &Weight::zero(n))?);
    let rhs2 = QTRational::from_laurent(phi_at(mu, n, &one_plus_to(n))?);
    Ok((IdentitySides { lhs: lhs1, rhs: rhs1 }, IdentitySides { lhs: lhs2, rhs: rhs2 }))
}
