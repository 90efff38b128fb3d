//! Fiber characters at principal nilpotent pairs and the Garsia–Haiman walk.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{syt_enumerate, Partition, StandardTableau};
use crate::qtfield::{omega_zero_factored, sum_factored, Factored, Mono, QTLaurent};

fn one_minus(m: Mono) -> Factored {
    Factored::one_minus(m).expect("nontrivial monomial")
}

/// 1 − q − t + qt
fn bi_diff() -> QTLaurent {
    QTLaurent::from_int_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)])
}

/// ∏_{x} (1 − q^{1+a} t^{−l})(1 − q^{−a} t^{1+l}) over the cells of λ.
pub fn arm_leg_product(lambda: &Partition) -> Factored {
    let mut f = Factored::one();
    for x in lambda.cells() {
        let (a, l, _) = lambda.arm_leg_hook(x).unwrap();
        let (a, l) = (a as i32, l as i32);
        f.mul_assign(&one_minus(Mono::new(1 + a, -l)));
        f.mul_assign(&one_minus(Mono::new(-a, 1 + l)));
    }
    f
}

/// The σ-independent factor in front of the tableau sum.
pub fn pnp_prefactor(mu: &Partition) -> Result<Factored> {
    let n = mu.size() as i32;
    let mut f = arm_leg_product(mu);
    f.mul_assign(&one_minus(Mono::q()).pow(-n));
    f.mul_assign(&one_minus(Mono::t()).pow(-n));
    let binv = mu.b_poly().map_monos(|m| m.inv());
    f.mul_assign(&omega_zero_factored(&binv)?.inv());
    Ok(f)
}

/// Γ_σ(q,t) = ∏_k Ω[(1−q−t+qt) B_{σ(k−1)} q^{−c} t^{−r}]⁰.
pub fn gamma(sigma: &StandardTableau) -> Result<Factored> {
    let d = bi_diff();
    let mut f = Factored::one();
    for k in 1..=sigma.size() {
        let (c, r) = sigma.cell_of(k);
        let e = (&d * &sigma.sub_shape(k - 1).b_poly()).mul_mono(Mono::new(-(c as i32), -(r as i32)));
        f.mul_assign(&omega_zero_factored(&e)?);
    }
    Ok(f)
}

/// prefactor · Γ_σ for one tableau.
pub fn pnp_term(mu: &Partition, sigma: &StandardTableau) -> Result<Factored> {
    Ok(&pnp_prefactor(mu)? * &gamma(sigma)?)
}

fn require_polynomial(name: &str, mu: &Partition, terms: &[Factored]) -> Result<QTLaurent> {
    let r = sum_factored(terms);
    let p = r
        .to_laurent()
        .map_err(|_| Error::Internal(format!("{} for {} did not simplify to a polynomial", name, mu)))?;
    if !p.has_nonneg_integer_coeffs() {
        return Err(Error::Internal(format!("{} for {} has a negative or fractional coefficient", name, mu)));
    }
    Ok(p)
}

/// Bigraded character of the fiber at the principal nilpotent pair of shape μ.
pub fn pnp_character(mu: &Partition) -> Result<QTLaurent> {
    let pre = pnp_prefactor(mu)?;
    let terms = syt_enumerate(mu)
        .par_iter()
        .map(|s| Ok(&pre * &gamma(s)?))
        .collect::<Result<Vec<_>>>()?;
    require_polynomial("fiber character", mu, &terms)
}

/// (arm, leg) of every cell of a shape.
fn arms_legs(shape: &Partition, x: (usize, usize)) -> (i32, i32) {
    let (a, l, _) = shape.arm_leg_hook(x).unwrap();
    (a as i32, l as i32)
}

/// Π_{σ(k)}: ratio products over the row and column of the k-th box.
pub fn gh_step(sigma: &StandardTableau, k: usize) -> Factored {
    let (cur, prev) = (sigma.sub_shape(k), sigma.sub_shape(k - 1));
    let (c, r) = sigma.cell_of(k);
    let mut f = Factored::one();
    for i in 0..c {
        let (a1, l1) = arms_legs(&cur, (i, r));
        let (a0, l0) = arms_legs(&prev, (i, r));
        f.mul_assign(&one_minus(Mono::new(1 + a1, -l1)));
        f.mul_assign(&one_minus(Mono::new(1 + a0, -l0)).inv());
    }
    for j in 0..r {
        let (a1, l1) = arms_legs(&cur, (c, j));
        let (a0, l0) = arms_legs(&prev, (c, j));
        f.mul_assign(&one_minus(Mono::new(-a1, 1 + l1)));
        f.mul_assign(&one_minus(Mono::new(-a0, 1 + l0)).inv());
    }
    f
}

/// ∏_k Π_{σ(k)} for one tableau.
pub fn gh_term(sigma: &StandardTableau) -> Factored {
    let mut f = Factored::one();
    for k in 1..=sigma.size() {
        f.mul_assign(&gh_step(sigma, k));
    }
    f
}

pub fn garsia_haiman_character(mu: &Partition) -> Result<QTLaurent> {
    let terms: Vec<Factored> = syt_enumerate(mu).par_iter().map(gh_term).collect();
    require_polynomial("Garsia–Haiman sum", mu, &terms)
}

/// The three diagram identities behind the tableau-by-tableau comparison.
/// GH2 and GH3 are checked at every removable box.
pub fn gh_lemma_checks(nu: &Partition) -> (bool, bool, bool) {
    let d = bi_diff();
    let m = |a: i64, b: i64| QTLaurent::mono(Mono::new(a as i32, b as i32));
    let conj = nu.conjugate();
    let lhs = &nu.b_poly() * &d;
    let l = nu.len() as i64;
    let mut rhs1 = &QTLaurent::one() - &m(0, l);
    for i in 1..=l {
        rhs1 += &(&m(nu.part(i as usize - 1) as i64, i) - &m(nu.part(i as usize - 1) as i64, i - 1));
    }
    let lc = conj.len() as i64;
    let mut rhs2 = &QTLaurent::one() - &m(lc, 0);
    for j in 1..=lc {
        rhs2 += &(&m(j, conj.part(j as usize - 1) as i64) - &m(j - 1, conj.part(j as usize - 1) as i64));
    }
    let gh1 = lhs == rhs1 && lhs == rhs2;

    // Σ_{i=1}^{c} (q^i − q^{i−1}) t^{μ′_i} + Σ_{j=1}^{r} q^{μ_j}(t^j − t^{j−1})
    let strip = |c: usize, r: usize| {
        let mut s = QTLaurent::zero();
        for i in 1..=c {
            let e = conj.part(i - 1) as i64;
            s += &(&m(i as i64, e) - &m(i as i64 - 1, e));
        }
        for j in 1..=r {
            let e = nu.part(j - 1) as i64;
            s += &(&m(e, j as i64) - &m(e, j as i64 - 1));
        }
        s
    };
    let mut gh2 = true;
    let mut gh3 = true;
    for (c, r) in nu.removable_cells() {
        let smaller = nu.remove_cell((c, r)).unwrap();
        let lhs = &smaller.b_poly() * &d;
        let rhs = &(&QTLaurent::one() - &m(c as i64, r as i64)) + &strip(c, r);
        gh2 &= lhs == rhs;

        let mut answer = QTLaurent::zero();
        for j in 0..r {
            let (a1, l1) = arms_legs(nu, (c, j));
            let (a0, l0) = arms_legs(&smaller, (c, j));
            answer += &(&m(1 + a0 as i64, -l0 as i64) - &m(1 + a1 as i64, -l1 as i64));
        }
        for i in 0..c {
            let (a1, l1) = arms_legs(nu, (i, r));
            let (a0, l0) = arms_legs(&smaller, (i, r));
            answer += &(&m(-a0 as i64, 1 + l0 as i64) - &m(-a1 as i64, 1 + l1 as i64));
        }
        let answer2 = strip(c, r).mul_mono(Mono::new(-(c as i32), -(r as i32)));
        gh3 &= answer == answer2;
    }
    (gh1, gh2, gh3)
}
