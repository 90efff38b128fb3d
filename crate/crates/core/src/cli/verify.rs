//! Named identity suites. Each suite expands into independent instances that
//! run in parallel; the report keeps them in construction order.

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::characters::{
    fake_degree_character, gh_lemma_checks, gh_term, pnp_character, pnp_term, rnil_isotypic, rnil_specialized,
    chi_r_atiyah_bott, chi_r_thm,
};
use crate::cherednik::{g_poly, gordon_closed_form, hesselink_sides, thm_identities_check, CherednikParam};
use crate::error::{Error, Result};
use crate::macdonald::modified_macdonald;
use crate::partitions::{partitions_of, sub_partitions, syt_enumerate, Partition, Var};
use crate::pnp_degenerations::merge_graph;
use crate::qtfield::{c, sum_factored, Factored, Mono, QTLaurent, QTRational};
use crate::symfunc::{char_table, z_rho, PlethFactor, SchurExpansion};
use crate::weights::{horizontal_strip_below, inverse_pieri_set, phi, phi_combo, psi, psi_combo, star, Weight, ZCombo};

pub const SUITES: &[&str] = &[
    "pnp-examples",
    "gh-equivalence",
    "regular-rank",
    "chi-r-agreement",
    "kostka-macdonald",
    "thm-identities",
    "hesselink",
    "fake-degree",
    "gordon",
    "rnil-specialization",
    "pieri-combinatorics",
    "gh-lemmas",
    "merge-lemma",
];

/// Range flags. `n` is the main size bound, `deg` a degree bound and `cap`
/// a secondary bound whose meaning depends on the suite.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub deg: Option<i64>,
    pub cap: Option<usize>,
    pub timing: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    pub label: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    pub label: String,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub name: String,
    pub range: String,
    pub total: usize,
    pub passed: usize,
    pub instances: Vec<InstanceResult>,
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }
}

/// Outcome of one instance; both sides are only serialized on failure.
pub struct Check {
    pass: bool,
    lhs: Value,
    rhs: Value,
}

impl Check {
    fn eq<T: Serialize + PartialEq>(lhs: &T, rhs: &T) -> Check {
        if lhs == rhs {
            Check { pass: true, lhs: Value::Null, rhs: Value::Null }
        } else {
            Check { pass: false, lhs: to_value(lhs), rhs: to_value(rhs) }
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or_else(|e| json!({ "error": e.to_string() }))
}

type Job = Box<dyn Fn() -> Result<Check> + Send + Sync>;

struct Suite {
    range: String,
    jobs: Vec<(String, Job)>,
}

impl Suite {
    fn new(range: String) -> Self {
        Suite { range, jobs: Vec::new() }
    }
    fn add<F: Fn() -> Result<Check> + Send + Sync + 'static>(&mut self, label: String, f: F) {
        self.jobs.push((label, Box::new(f)));
    }
}

pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerifyReport> {
    let start = Instant::now();
    let suite = build(name, params)?;
    let results: Vec<Check> = suite
        .jobs
        .par_iter()
        .map(|(_, f)| {
            f().unwrap_or_else(|e| Check { pass: false, lhs: json!({ "error": e.to_string() }), rhs: Value::Null })
        })
        .collect();
    let mut instances = Vec::with_capacity(results.len());
    let mut counterexample = None;
    for ((label, _), r) in suite.jobs.iter().zip(results) {
        if !r.pass && counterexample.is_none() {
            counterexample = Some(Counterexample { label: label.clone(), lhs: r.lhs, rhs: r.rhs });
        }
        instances.push(InstanceResult { label: label.clone(), pass: r.pass });
    }
    let passed = instances.iter().filter(|i| i.pass).count();
    Ok(VerifyReport {
        name: name.to_string(),
        range: suite.range,
        total: instances.len(),
        passed,
        instances,
        counterexample,
        wall_ms: params.timing.then(|| start.elapsed().as_millis() as u64),
    })
}

fn build(name: &str, p: &SuiteParams) -> Result<Suite> {
    match name {
        "pnp-examples" => Ok(pnp_examples()),
        "gh-equivalence" => Ok(gh_equivalence(p.n.unwrap_or(6))),
        "regular-rank" => Ok(regular_rank(p.n.unwrap_or(7))),
        "chi-r-agreement" => Ok(chi_r_agreement(p.n.unwrap_or(3), p.deg.unwrap_or(4))),
        "kostka-macdonald" => Ok(kostka_macdonald(p.n.unwrap_or(5))),
        "thm-identities" => Ok(thm_identities(p.n.unwrap_or(4), p.cap.unwrap_or(3))),
        "hesselink" => Ok(hesselink(p.n.unwrap_or(3), p.cap.unwrap_or(4) as i64)),
        "fake-degree" => Ok(fake_degree(p.n.unwrap_or(5))),
        "gordon" => Ok(gordon(p.n.unwrap_or(5), p.cap.unwrap_or(5) as u64)),
        "rnil-specialization" => Ok(rnil_specialization(p.n.unwrap_or(4))),
        "pieri-combinatorics" => Ok(pieri_combinatorics(p.n.unwrap_or(5))),
        "gh-lemmas" => Ok(gh_lemmas(p.n.unwrap_or(8))),
        "merge-lemma" => Ok(merge_lemma(p.n.unwrap_or(5))),
        _ => Err(Error::Invalid(format!("unknown suite '{}'; known: {}", name, SUITES.join(", ")))),
    }
}

fn lp(ts: &[(i32, i32, i64)]) -> QTLaurent {
    QTLaurent::from_int_terms(ts)
}

/// Partitions contained in `outer`, by size.
fn inside(outer: &Partition) -> Vec<Partition> {
    (0..=outer.size()).flat_map(partitions_of).filter(|m| m.is_contained_in(outer)).collect()
}

fn pnp_examples() -> Suite {
    let mut s = Suite::new("mu in {(2,1), (3,1)}".into());
    s.add("mu=2,1".into(), || {
        Ok(Check::eq(&pnp_character(&Partition::from(&[2, 1]))?, &lp(&[(1, 1, 1), (1, 0, 2), (0, 1, 2), (0, 0, 1)])))
    });
    s.add("mu=3,1".into(), || {
        let want = lp(&[(3, 1, 1), (3, 0, 3), (2, 1, 3), (2, 0, 5), (1, 1, 5), (1, 0, 3), (0, 1, 3), (0, 0, 1)]);
        Ok(Check::eq(&pnp_character(&Partition::from(&[3, 1]))?, &want))
    });
    s
}

fn gh_equivalence(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("n <= {}, every standard tableau", max_n));
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            for (i, sigma) in syt_enumerate(&mu).into_iter().enumerate() {
                let mu = mu.clone();
                s.add(format!("mu={} sigma#{}", mu, i), move || {
                    Ok(Check::eq(&pnp_term(&mu, &sigma)?.to_rational(), &gh_term(&sigma).to_rational()))
                });
            }
        }
    }
    s
}

fn regular_rank(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("n <= {}", max_n));
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            s.add(format!("mu={}", mu), move || {
                let v = pnp_character(&mu)?.eval(&c(1), &c(1))?;
                let fact: i64 = (1..=n as i64).product();
                Ok(Check::eq(&v.to_string(), &fact.to_string()))
            });
        }
    }
    s
}

fn chi_r_agreement(max_n: usize, deg: i64) -> Suite {
    let mut s = Suite::new(format!("n <= {}, D = {}", max_n, deg));
    for n in 1..=max_n {
        s.add(format!("n={} D={}", n, deg), move || Ok(Check::eq(&chi_r_thm(n, deg)?, &chi_r_atiyah_bott(n, deg)?)));
    }
    s
}

fn kostka_macdonald(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("n <= {}", max_n));
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            let m = mu.clone();
            s.add(format!("mu={} natural-positive", mu), move || {
                let h = modified_macdonald(&m)?;
                let bad: Vec<String> = partitions_of(n)
                    .into_iter()
                    .filter(|l| {
                        let k = h.coeff(l).to_laurent();
                        !matches!(k, Ok(k) if k.is_polynomial() && k.has_nonneg_integer_coeffs())
                    })
                    .map(|l| l.to_string())
                    .collect();
                Ok(Check::eq(&bad, &Vec::new()))
            });
            let m = mu.clone();
            s.add(format!("mu={} top-row", mu), move || {
                Ok(Check::eq(&modified_macdonald(&m)?.coeff(&Partition::row(n)), &QTRational::one()))
            });
            let m = mu.clone();
            s.add(format!("mu={} syt-count", mu), move || {
                let h = modified_macdonald(&m)?;
                let mut got = Vec::new();
                let mut want = Vec::new();
                for l in partitions_of(n) {
                    let v = h.coeff(&l).to_laurent().and_then(|k| k.eval(&c(1), &c(1)));
                    got.push(v.ok().map(|v| v.to_string()));
                    want.push(Some(syt_enumerate(&l).len().to_string()));
                }
                Ok(Check::eq(&got, &want))
            });
            s.add(format!("mu={} principal", mu), move || {
                let h = modified_macdonald(&mu)?;
                let sq = SchurExpansion::schur(&mu).pleth_scale(&PlethFactor::over_one_minus_q());
                let pref =
                    QTRational::from_laurent(mu.hook_poly(Var::Q).mul_mono(Mono::new(-(mu.n_stat() as i32), 0)));
                let mut lhs = Vec::new();
                let mut rhs = Vec::new();
                for l in partitions_of(n) {
                    lhs.push(h.coeff(&l).subst_mono(Mono::q(), Mono::new(-1, 0))?);
                    rhs.push(&pref * &sq.coeff(&l));
                }
                Ok(Check::eq(&lhs, &rhs))
            });
        }
    }
    s
}

fn thm_identities(max_n: usize, first_cap: usize) -> Suite {
    let mut s = Suite::new(format!(
        "second: mu in (2,2), 2 <= n <= {}; first: mu in (2), lambda |- n, 2 <= n <= {}",
        max_n,
        first_cap.min(max_n)
    ));
    for n in 2..=max_n {
        for mu in inside(&Partition::from(&[2, 2])).into_iter().filter(|m| m.len() < n) {
            s.add(format!("second n={} mu={}", n, mu), move || {
                let (_, second) = thm_identities_check(n, &mu, &Partition::row(n))?;
                Ok(Check::eq(&second.lhs, &second.rhs))
            });
        }
    }
    for n in 2..=first_cap.min(max_n) {
        for lam in partitions_of(n) {
            for mu in inside(&Partition::row(2)) {
                let lam = lam.clone();
                s.add(format!("first n={} mu={} lambda={}", n, mu, lam), move || {
                    let (first, _) = thm_identities_check(n, &mu, &lam)?;
                    Ok(Check::eq(&first.lhs, &first.rhs))
                });
            }
        }
    }
    s
}

/// Dominant weights of size zero with |μ|₊ ≤ cap.
pub fn root_cone_dominant(n: usize, cap: i64) -> Vec<Weight> {
    fn go(prev: i64, left: usize, cur: &mut Vec<i64>, cap: i64, out: &mut Vec<Weight>) {
        if left == 0 {
            let w = Weight::new(cur.clone());
            if w.size() == 0 && w.positive_size() <= cap {
                out.push(w);
            }
            return;
        }
        for v in (-cap..=prev).rev() {
            cur.push(v);
            go(v, left - 1, cur, cap, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(cap, n, &mut Vec::new(), cap, &mut out);
    out
}

fn hesselink(max_n: usize, cap: i64) -> Suite {
    let mut s = Suite::new(format!("n <= {}, |mu|+ <= {}", max_n, cap));
    for n in 1..=max_n {
        for mu in root_cone_dominant(n, cap) {
            s.add(format!("mu={}", mu), move || {
                let sides = hesselink_sides(&mu)?;
                Ok(Check::eq(&sides.lhs, &sides.rhs))
            });
        }
    }
    s
}

/// (1/n!) Σ_w χ_λ(w) / det(1 − q⁻¹w), summed over cycle types.
fn molien(n: usize, lambda: &Partition) -> Result<QTRational> {
    let table = char_table(n);
    let mut terms = Vec::new();
    for rho in partitions_of(n) {
        let chi = table.chi[table.idx(lambda)][table.idx(&rho)];
        if chi == 0 {
            continue;
        }
        let mut f = Factored::constant(c(chi) / c(z_rho(&rho) as i64))?;
        for &r in rho.parts() {
            f.mul_assign(&Factored::one_minus(Mono::new(-(r as i32), 0))?.inv());
        }
        terms.push(f);
    }
    Ok(sum_factored(&terms))
}

fn fake_degree(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("n <= {}", max_n));
    for n in 1..=max_n {
        for lam in partitions_of(n) {
            s.add(format!("n={} lambda={}", n, lam), move || {
                let fd = fake_degree_character(n);
                let got = fd.get(&lam).cloned().unwrap_or_else(QTRational::zero);
                Ok(Check::eq(&got, &molien(n, &lam)?))
            });
        }
    }
    s
}

fn gordon(max_m: usize, max_l: u64) -> Suite {
    let mut s = Suite::new(format!("m <= {}, l <= {} coprime to m", max_m, max_l));
    for m in 1..=max_m {
        for l in 1..=max_l {
            if num_integer::gcd(l, m as u64) != 1 {
                continue;
            }
            for mu in partitions_of(m) {
                s.add(format!("l={} m={} mu={}", l, m, mu), move || {
                    let k = CherednikParam::new(l, m as u64)?;
                    Ok(Check::eq(&g_poly(k, 1, &Partition::row(1), &mu)?, &gordon_closed_form(l, &mu)?))
                });
            }
        }
    }
    s
}

fn rnil_specialization(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("mu in (2,2), lambda |- n, n <= {}", max_n));
    for n in 1..=max_n {
        for lam in partitions_of(n) {
            for mu in inside(&Partition::from(&[2, 2])).into_iter().filter(|m| m.len() < n) {
                let lam = lam.clone();
                s.add(format!("n={} mu={} lambda={}", n, mu, lam), move || {
                    let full = rnil_isotypic(&mu, &lam)?.subst_mono(Mono::q(), Mono::new(-1, 0))?;
                    Ok(Check::eq(&full, &rnil_specialized(&mu, &lam)?))
                });
            }
        }
    }
    s
}

fn pieri_combinatorics(max_deg: usize) -> Suite {
    let mut s = Suite::new(format!("downsets of (4,4,4); E-sets mu in (3,3), n in {{3,4}}; plethysm degree <= {}", max_deg));
    for l in sub_partitions(&Partition::from(&[4, 4, 4])) {
        let unit: ZCombo = [(l.clone(), 1)].into_iter().collect();
        let (l2, unit2) = (l.clone(), unit.clone());
        s.add(format!("phi.psi lambda={}", l), move || Ok(Check::eq(&phi_combo(&psi(&l, 4)?, 4)?, &unit)));
        s.add(format!("psi.phi lambda={}", l2), move || Ok(Check::eq(&psi_combo(&phi(&l2, 4)?, 4)?, &unit2)));
    }
    for n in [3, 4] {
        for mu in inside(&Partition::from(&[3, 3])) {
            s.add(format!("E-set n={} mu={}", n, mu), move || {
                let e = inverse_pieri_set(&Weight::from_partition(&mu, n)?, mu.size());
                let left: BTreeSet<Weight> = e.iter().map(|x| x.neg_w0()).collect();
                let right = horizontal_strip_below(&mu).iter().map(|f| star(f, n)).collect::<Result<BTreeSet<_>>>()?;
                Ok(Check::eq(&left, &right))
            });
        }
    }
    for d in 0..=max_deg {
        for l in partitions_of(d) {
            s.add(format!("pleth round trip lambda={}", l), move || {
                let f = SchurExpansion::schur(&l);
                let a = f.pleth_scale(&PlethFactor::one_minus_t()).pleth_scale(&PlethFactor::over_one_minus_t());
                let b = f.pleth_scale(&PlethFactor::over_one_minus_q()).pleth_scale(&PlethFactor::one_minus_q());
                Ok(Check::eq(&(&a, &b), &(&f, &f)))
            });
        }
    }
    s
}

fn gh_lemmas(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("nu |- n, n <= {}", max_n));
    for n in 0..=max_n {
        for nu in partitions_of(n) {
            s.add(format!("nu={}", nu), move || {
                let (a, b, c) = gh_lemma_checks(&nu);
                Ok(Check::eq(&[a, b, c], &[true; 3]))
            });
        }
    }
    s
}

fn merge_lemma(max_n: usize) -> Suite {
    let mut s = Suite::new(format!("mu |- n, n <= {}", max_n));
    for n in 1..=max_n {
        for mu in partitions_of(n) {
            s.add(format!("mu={}", mu), move || {
                let g = merge_graph(&mu)?;
                let lhs = json!({ "stuck": g.stuck(), "connected": g.connected_to_full() });
                Ok(Check::eq(&lhs, &json!({ "stuck": [], "connected": true })))
            });
        }
    }
    s
}
