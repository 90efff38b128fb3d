use num_traits::ToPrimitive;

use super::factored::Factored;
use super::laurent::{Mono, QTLaurent};
use super::rational::QTRational;
use crate::error::{Error, Result};

/// Ω[E]⁰ = ∏_{m ≠ 1} (1 - m)^{a_m}, kept factored.
pub fn omega_zero_factored(e: &QTLaurent) -> Result<Factored> {
    let mut out = Factored::one();
    for (m, c) in e.terms() {
        if m.is_one() {
            continue;
        }
        if !m.is_integral() {
            return Err(Error::Domain(format!("Ω of a half-integer exponent monomial ({})", e)));
        }
        if !c.is_integer() {
            return Err(Error::Domain(format!("Ω of a non-integral multiplicity {}", c)));
        }
        let k = c
            .to_integer()
            .to_i32()
            .ok_or_else(|| Error::Domain("multiplicity out of range".into()))?;
        out.mul_assign(&Factored::one_minus(*m)?.pow(k));
    }
    Ok(out)
}

pub fn omega_zero(e: &QTLaurent) -> Result<QTRational> {
    Ok(omega_zero_factored(e)?.to_rational())
}

/// p_k[E]: every exponent pair scaled by k.
pub fn pleth_power(k: u32, e: &QTLaurent) -> QTLaurent {
    assert!(k >= 1, "p_0 is not a plethysm");
    e.map_monos(|m: Mono| m.pow(k as i32))
}
