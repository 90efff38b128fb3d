use crate::error::{Error, Result};
use crate::qtfield::QTLaurent;
use crate::weights::{permutations, KostantKind, KostantTable, RootDataA, Weight};

/// K_{λμ}(t) = Σ_w (−1)^{ℓ(w)} 𝒫_t(w(λ+ρ) − (μ+ρ)).
pub fn lusztig_t_analog(lambda: &Weight, mu: &Weight) -> Result<QTLaurent> {
    if !lambda.is_dominant() || !mu.is_dominant() {
        return Err(Error::Invalid(format!("{} and {} must both be dominant", lambda, mu)));
    }
    let n = lambda.n();
    if mu.n() != n {
        return Err(Error::Invalid("weights of different rank".into()));
    }
    let Some(cap) = (lambda - mu).simple_root_coords() else {
        return Ok(QTLaurent::zero());
    };
    if cap.iter().any(|&x| x < 0) {
        return Ok(QTLaurent::zero());
    }
    // every w(λ+ρ) − (μ+ρ) lies below λ − μ
    let table = KostantTable::new(n, &cap, KostantKind::T);
    let rho = Weight::rho(n);
    let (lr, mr) = (lambda + &rho, mu + &rho);
    let roots = RootDataA::new(n);
    let mut acc = QTLaurent::zero();
    for w in permutations(n) {
        let v = table.get(&(&lr.permute(&w) - &mr));
        if v.is_zero() {
            continue;
        }
        if roots.length(&w).is_multiple_of(2) {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc)
}
