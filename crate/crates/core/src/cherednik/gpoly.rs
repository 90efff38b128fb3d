use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{empty_core_partitions, partitions_of, r_core_quotient_sign, Partition};
use crate::qtfield::{Mono, QTLaurent, QTRational};
use crate::symfunc::{lr_coeff, pleth_coeff, schur_at, PlethFactor};

/// k = l/r in lowest terms, l ≥ 0, r ≥ 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CherednikParam {
    pub l: u64,
    pub r: u64,
}

impl CherednikParam {
    pub fn new(l: u64, r: u64) -> Result<Self> {
        if r == 0 {
            return Err(Error::Invalid("denominator of k must be positive".into()));
        }
        let g = l.gcd(&r);
        Ok(CherednikParam { l: l / g, r: r / g })
    }

    /// Accepts "l/r" or "l".
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("cannot read k from {:?}", s));
        let (a, b) = match s.trim().split_once('/') {
            Some((a, b)) => (a.trim(), b.trim()),
            None => (s.trim(), "1"),
        };
        Self::new(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
    }

    pub fn k(&self) -> Ratio<i64> {
        Ratio::new(self.l as i64, self.r as i64)
    }
}

impl fmt::Display for CherednikParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.r == 1 {
            write!(f, "{}", self.l)
        } else {
            write!(f, "{}/{}", self.l, self.r)
        }
    }
}

/// Lowest eigenvalue of the grading element on Δ(λ): m/2 + k(n(λ) − n(λ′)).
pub fn kappa(k: Ratio<i64>, lambda: &Partition) -> Ratio<i64> {
    let m = lambda.size() as i64;
    let d = lambda.n_stat() as i64 - lambda.conjugate().n_stat() as i64;
    Ratio::new(m, 2) + k * d
}

/// t^x for x ∈ ½ℤ.
pub fn t_power(x: Ratio<i64>) -> Result<Mono> {
    let twice = x * 2;
    if !twice.is_integer() {
        return Err(Error::Domain(format!("t^{} is not a half-integer power", x)));
    }
    Ok(Mono::doubled(0, *twice.numer() as i32))
}

/// ⟨s_μ[Z/(1−t)], s_ν⟩, which equals H_μ(t)⁻¹ K_{νμ}(t,t).
pub fn delta_coeff(mu: &Partition, nu: &Partition) -> QTRational {
    pleth_coeff(mu, nu, &PlethFactor::over_one_minus_t())
}

/// G_{k,n}(λ,ν;t), summed over the partitions of m = nr with empty r-core.
pub fn g_poly(k: CherednikParam, n: usize, lambda: &Partition, nu: &Partition) -> Result<QTRational> {
    let r = k.r as usize;
    let m = n * r;
    if lambda.size() != n {
        return Err(Error::Invalid(format!("{} is not a partition of {}", lambda, n)));
    }
    if nu.size() != m {
        return Err(Error::Invalid(format!("{} is not a partition of {}·{} = {}", nu, n, r, m)));
    }
    let terms = empty_core_partitions(r, m)
        .par_iter()
        .map(|mu| {
            let c = if r == 1 {
                i64::from(mu == lambda)
            } else {
                let cq = r_core_quotient_sign(mu, r, m)?;
                cq.sign as i64 * lr_coeff(&cq.quotient, lambda) as i64
            };
            if c == 0 {
                return Ok(None);
            }
            let t = t_power(kappa(k.k(), mu))?;
            Ok(Some(delta_coeff(mu, nu).mul_mono(t).scale(&crate::qtfield::c(c))))
        })
        .collect::<Result<Vec<_>>>()?;
    let terms: Vec<QTRational> = terms.into_iter().flatten().collect();
    Ok(QTRational::sum(&terms))
}

/// 𝒢(λ,ν;t) = G_{n/|ν|, n}(λ,ν;t); requires n | |ν|.
pub fn script_g(lambda: &Partition, nu: &Partition) -> Result<QTRational> {
    let n = lambda.size();
    if n == 0 || !nu.size().is_multiple_of(n) || nu.is_empty() {
        return Err(Error::Invalid(format!("|{}| is not a positive multiple of {}", nu, n)));
    }
    g_poly(CherednikParam::new(n as u64, nu.size() as u64)?, n, lambda, nu)
}

/// ν ↦ G_{k,n}(λ,ν;t) over all ν ⊢ nr: the graded S_m-character of L(rλ).
pub fn simple_module_character(k: CherednikParam, n: usize, lambda: &Partition) -> Result<BTreeMap<Partition, QTRational>> {
    partitions_of(n * k.r as usize)
        .into_iter()
        .map(|nu| {
            let g = g_poly(k, n, lambda, &nu)?;
            Ok((nu, g))
        })
        .collect()
}

/// t^γ / (1 − t^l) · s_μ[(1 − t^l)/(1 − t)] with γ = (m + l − ml)/2.
pub fn gordon_closed_form(l: u64, mu: &Partition) -> Result<QTRational> {
    let m = mu.size() as i64;
    let l = l as i64;
    if l == 0 {
        return Err(Error::Domain("l must be positive".into()));
    }
    let gamma = Ratio::new(m + l - m * l, 2);
    let mut alphabet = QTLaurent::zero();
    for i in 0..l as i32 {
        alphabet += &QTLaurent::mono(Mono::new(0, i));
    }
    let num = schur_at(mu, &alphabet).mul_mono(t_power(gamma)?);
    QTRational::from_laurent(num).div_ref(&QTRational::from_laurent(QTLaurent::one_minus(Mono::new(0, l as i32))))
}
