use std::collections::BTreeMap;

use qtforge::macdonald::*;
use qtforge::partitions::{partitions_of, syt_enumerate, Partition, Var};
use qtforge::qtfield::{c, Mono, QTLaurent, QTRational};
use qtforge::symfunc::{pleth_matrix, PlethFactor, SchurExpansion};
use qtforge::weights::{RootDataA, Weight};

fn p(v: &[usize]) -> Partition {
    Partition::from(v)
}

fn lp(ts: &[(i32, i32, i64)]) -> QTRational {
    QTRational::from_laurent(QTLaurent::from_int_terms(ts))
}

fn w(c: &[i64]) -> Weight {
    Weight::from(c)
}

fn ssyt_count(lambda: &Partition, content: &[usize]) -> u64 {
    fn go(cells: &[(usize, usize)], k: usize, grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
        if k == cells.len() {
            return 1;
        }
        let (r, c) = cells[k];
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(grid[r][c - 1]);
        }
        if r > 0 {
            lo = lo.max(grid[r - 1][c] + 1);
        }
        let mut total = 0;
        for v in lo..=left.len() {
            if left[v - 1] > 0 {
                left[v - 1] -= 1;
                grid[r][c] = v;
                total += go(cells, k + 1, grid, left);
                left[v - 1] += 1;
            }
        }
        total
    }
    if content.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    go(&cells, 0, &mut grid, &mut content.to_vec())
}

/// Monomial coefficients of H̃_μ from the inversion/major-index filling
/// statistics, converted to Schur coefficients by inverting Kostka numbers.
fn hhl_oracle(mu: &Partition) -> BTreeMap<Partition, QTLaurent> {
    let n = mu.size();
    let cells: Vec<(usize, usize)> = mu.cells();
    let at = |c: usize, r: usize| cells.iter().position(|&x| x == (c, r)).unwrap();
    // reading order: top row first, left to right
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(cells[i].1), cells[i].0));
    let pos: Vec<usize> = {
        let mut v = vec![0; n];
        for (k, &i) in order.iter().enumerate() {
            v[i] = k;
        }
        v
    };
    let attacking: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let ((ci, ri), (cj, rj)) = (cells[i], cells[j]);
            if pos[i] >= pos[j] {
                return false;
            }
            (ri == rj) || (ri == rj + 1 && ci > cj)
        })
        .collect();
    let stat = |f: &[usize]| -> Mono {
        let mut maj = 0;
        let mut arms = 0;
        for (i, &(c, r)) in cells.iter().enumerate() {
            if r > 0 && f[i] > f[at(c, r - 1)] {
                let (a, l, _) = mu.arm_leg_hook((c, r)).unwrap();
                maj += l + 1;
                arms += a;
            }
        }
        let inv = attacking.iter().filter(|&&(i, j)| f[i] > f[j]).count() - arms;
        Mono::new(inv as i32, maj as i32)
    };
    let mut mono_coeffs: BTreeMap<Partition, QTLaurent> = BTreeMap::new();
    for nu in partitions_of(n) {
        let mut word: Vec<usize> = nu.parts().iter().enumerate().flat_map(|(i, &k)| vec![i + 1; k]).collect();
        let mut acc = QTLaurent::zero();
        loop {
            acc += &QTLaurent::mono(stat(&word));
            // next multiset permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| word[i] < word[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| word[j] > word[i]).unwrap();
            word.swap(i, j);
            word[i + 1..].reverse();
        }
        mono_coeffs.insert(nu, acc);
    }
    // a_ν = Σ_λ c_λ K_{λν}, unitriangular in lex order
    let parts = partitions_of(n);
    let mut out: BTreeMap<Partition, QTLaurent> = BTreeMap::new();
    for lam in &parts {
        let mut v = mono_coeffs[lam].clone();
        for (kappa, ck) in &out {
            let k = ssyt_count(kappa, lam.parts()) as i64;
            v -= &ck.scale_int(k);
        }
        out.insert(lam.clone(), v);
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn dominates(a: &Partition, b: &Partition) -> bool {
    b.dominance_le(a).unwrap()
}

/// The axiomatic system solved by elimination directly over Q(q,t).
fn exact_solve(mu: &Partition) -> SchurExpansion {
    let n = mu.size();
    let parts = partitions_of(n);
    let np = parts.len();
    let mq = pleth_matrix(n, &PlethFactor::one_minus_q());
    let mt = pleth_matrix(n, &PlethFactor::one_minus_t());
    let mut rows: Vec<Vec<QTRational>> = Vec::new();
    for (b, nu) in parts.iter().enumerate() {
        if !dominates(nu, mu) {
            rows.push((0..np).map(|a| mq[a][b].clone()).chain([QTRational::zero()]).collect());
        }
        if !dominates(nu, &mu.conjugate()) {
            rows.push((0..np).map(|a| mt[a][b].clone()).chain([QTRational::zero()]).collect());
        }
    }
    let mut norm = vec![QTRational::zero(); np + 1];
    norm[0] = QTRational::one();
    norm[np] = QTRational::one();
    rows.push(norm);
    let mut r = 0;
    for col in 0..np {
        let piv = (r..rows.len()).find(|&i| !rows[i][col].is_zero()).expect("full rank");
        rows.swap(r, piv);
        let inv = rows[r][col].inv().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                rows[i] = rows[i].iter().zip(&rows[r]).map(|(x, y)| x - &(&f * y)).collect();
            }
        }
        r += 1;
    }
    assert!(rows[r..].iter().all(|row| row[np].is_zero()));
    SchurExpansion::from_map(parts.iter().enumerate().map(|(i, l)| (l.clone(), rows[i][np].clone())).collect())
}

#[test]
fn two_box_hand_values() {
    let h2 = modified_macdonald(&p(&[2])).unwrap();
    assert!(h2.coeff(&p(&[2])).is_one());
    assert_eq!(h2.coeff(&p(&[1, 1])), lp(&[(1, 0, 1)]));
    let h11 = modified_macdonald(&p(&[1, 1])).unwrap();
    assert!(h11.coeff(&p(&[2])).is_one());
    assert_eq!(h11.coeff(&p(&[1, 1])), lp(&[(0, 1, 1)]));
}

#[test]
fn matches_exact_field_elimination() {
    for n in 1..=4 {
        for mu in partitions_of(n) {
            assert_eq!(*modified_macdonald(&mu).unwrap(), exact_solve(&mu), "H~{}", mu);
        }
    }
}

#[test]
fn matches_filling_statistics() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let h = modified_macdonald(&mu).unwrap();
            let oracle = hhl_oracle(&mu);
            let got: BTreeMap<Partition, QTLaurent> =
                h.terms().iter().map(|(k, v)| (k.clone(), v.to_laurent().unwrap())).collect();
            assert_eq!(got, oracle, "H~{}", mu);
        }
    }
}

#[test]
fn top_row_coefficient_is_one() {
    for n in 1..=6 {
        let t = KostkaMacdonaldTable::new(n).unwrap();
        for mu in &t.parts {
            assert!(t.get(&Partition::row(n), mu).is_one());
        }
    }
}

#[test]
fn positivity_and_syt_count() {
    for n in 1..=5 {
        let t = KostkaMacdonaldTable::new(n).unwrap();
        for lam in &t.parts {
            let f = syt_enumerate(lam).len() as i64;
            for mu in &t.parts {
                let k = t.get(lam, mu).to_laurent().unwrap();
                assert!(k.has_nonneg_integer_coeffs() && k.is_polynomial(), "K~{}{}", lam, mu);
                assert_eq!(k.eval(&c(1), &c(1)).unwrap(), c(f));
            }
        }
    }
}

#[test]
fn conjugation_symmetry() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let a = modified_macdonald(&mu).unwrap();
            let b = modified_macdonald(&mu.conjugate()).unwrap();
            assert_eq!(a.swap_qt(), *b);
        }
    }
}

#[test]
fn principal_specialization() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let h = modified_macdonald(&mu).unwrap();
            let sq = SchurExpansion::schur(&mu).pleth_scale(&PlethFactor::over_one_minus_q());
            let pref = QTRational::from_laurent(mu.hook_poly(Var::Q).mul_mono(Mono::new(-(mu.n_stat() as i32), 0)));
            for lam in partitions_of(n) {
                let lhs = h.coeff(&lam).subst_mono(Mono::q(), Mono::new(-1, 0)).unwrap();
                let rhs = &pref * &sq.coeff(&lam);
                assert_eq!(lhs, rhs, "H~{} at s{}", mu, lam);
            }
        }
    }
}

#[test]
fn hook_product_at_inverse() {
    for n in 1..=6 {
        for lam in partitions_of(n) {
            let lhs = hook_product_qt(&lam).subst_mono(Mono::q(), Mono::new(-1, 0)).unwrap();
            let hq = lam.hook_poly(Var::Q);
            let rhs = &hq * &hq.map_monos(|m| m.inv());
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn k_at_t_t_matches_plethysm() {
    for n in 1..=5 {
        for mu in partitions_of(n) {
            let diag = kostka_k_diag(&mu).unwrap();
            let pl = SchurExpansion::schur(&mu).pleth_scale(&PlethFactor::over_one_minus_t());
            let hinv = QTRational::from_laurent(mu.hook_poly(Var::T)).inv().unwrap();
            for lam in partitions_of(n) {
                let k = QTRational::from_laurent(diag.get(&lam).cloned().unwrap_or_else(QTLaurent::zero));
                assert_eq!(pl.coeff(&lam), &hinv * &k, "K{}{}", lam, mu);
            }
            let top = kostka_k(&mu).unwrap()[&Partition::row(n)].clone();
            assert_eq!(top, QTRational::mono(Mono::new(0, mu.n_stat() as i32)));
        }
    }
    // n = 2 from the hand values: K(t,t) = [[1, t], [t, 1]]
    let d2 = kostka_k_diag(&p(&[2])).unwrap();
    assert!(d2[&p(&[2])].is_one());
    assert_eq!(d2[&p(&[1, 1])], QTLaurent::t());
    let d11 = kostka_k_diag(&p(&[1, 1])).unwrap();
    assert_eq!(d11[&p(&[2])], QTLaurent::t());
    assert!(d11[&p(&[1, 1])].is_one());
}

#[test]
fn integral_form_round_trip() {
    for n in 1..=4 {
        for mu in partitions_of(n) {
            let j = integral_form(&mu).unwrap();
            let back = j.j.pleth_scale(&PlethFactor::over_one_minus_t());
            assert_eq!(back, SchurExpansion::from_map(j.k.clone()));
        }
    }
}

#[test]
fn k_coefficients() {
    assert_eq!(k_coeffs(&p(&[1]), &p(&[1])).unwrap(), lp(&[(0, 0, 1), (1, 0, -1)]));
    // (1−q)(1−q²), 0 ; (1−q)(1−qt), (1−q)(t−q)
    assert_eq!(k_coeffs(&p(&[2]), &p(&[2])).unwrap(), lp(&[(0, 0, 1), (1, 0, -1), (2, 0, -1), (3, 0, 1)]));
    assert!(k_coeffs(&p(&[1, 1]), &p(&[2])).unwrap().is_zero());
    assert_eq!(k_coeffs(&p(&[2]), &p(&[1, 1])).unwrap(), lp(&[(0, 0, 1), (1, 0, -1), (1, 1, -1), (2, 1, 1)]));
    assert_eq!(k_coeffs(&p(&[1, 1]), &p(&[1, 1])).unwrap(), lp(&[(0, 1, 1), (1, 0, -1), (1, 1, -1), (2, 0, 1)]));
    for n in 1..=5 {
        for mu in partitions_of(n) {
            for lam in partitions_of(n) {
                let k = k_coeffs(&lam, &mu).unwrap();
                if !mu.dominance_le(&lam).unwrap() {
                    assert!(k.is_zero());
                }
            }
        }
    }
}

#[test]
fn degenerate_hand_value() {
    let e = degen_macdonald(&w(&[2, 0]), DegenVariant::Plain).unwrap();
    assert_eq!(e.coeffs.len(), 2);
    assert!(e.coeff(&w(&[2, 0])).is_one());
    assert_eq!(e.coeff(&w(&[1, 1])), QTLaurent::from_int_terms(&[(0, 1, -1)]));
}

fn box_weights(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<i64>| (lo..=hi).map(move |x| [v.clone(), vec![x]].concat())).collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn below(mu: &Weight, nu: &Weight) -> bool {
    (nu - mu).simple_root_coords().is_some_and(|m| m.iter().all(|&x| x >= 0))
}

#[test]
fn degenerate_support() {
    for n in 1..=4 {
        let (lo, hi) = if n == 4 { (-1, 2) } else { (-2, 2) };
        for l in box_weights(n, lo, hi) {
            let plus = qtforge::weights::dominant_rep(&l).0;
            for mu in degen_macdonald(&l, DegenVariant::Plain).unwrap().coeffs.keys() {
                assert!(mu.is_dominant());
                assert!(below(mu, &plus), "a_{{{},{}}}", l, mu);
            }
        }
    }
}

#[test]
fn tilde_lemma() {
    for n in 1..=4 {
        let two_rho = RootDataA::new(n).rho_doubled();
        let sigma = RootDataA::new(n).num_positive() as i32;
        let (lo, hi) = if n == 4 { (-1, 1) } else { (-2, 2) };
        for l in box_weights(n, lo, hi) {
            let tilde = degen_macdonald(&l, DegenVariant::Tilde).unwrap();
            let plain = degen_macdonald(&(&l + &two_rho), DegenVariant::Plain).unwrap();
            let sign = if sigma % 2 == 0 { 1 } else { -1 };
            let expect: BTreeMap<Weight, QTLaurent> = plain
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v.map_monos(|m| m.inv().mul(Mono::new(0, sigma))).scale_int(sign)))
                .collect();
            assert_eq!(tilde.coeffs, expect, "λ = {}", l);
            let top = qtforge::weights::dominant_rep(&(&l + &two_rho)).0;
            assert!(tilde.coeffs.keys().all(|mu| below(mu, &top)));
        }
    }
}

#[test]
fn degenerate_rank_cap() {
    assert!(degen_macdonald(&Weight::zero(8), DegenVariant::Plain).is_err());
}

#[test]
fn lusztig_small_values() {
    for n in 1..=4 {
        assert!(lusztig_t_analog(&Weight::zero(n), &Weight::zero(n)).unwrap().is_one());
    }
    assert!(lusztig_t_analog(&w(&[3, 1, 0]), &w(&[3, 1, 0])).unwrap().is_one());
    assert_eq!(lusztig_t_analog(&w(&[2, 0]), &w(&[1, 1])).unwrap(), QTLaurent::t());
    assert_eq!(lusztig_t_analog(&w(&[3, 0, 0]), &w(&[1, 1, 1])).unwrap(), QTLaurent::from_int_terms(&[(0, 3, 1)]));
    assert_eq!(
        lusztig_t_analog(&w(&[2, 1, 0]), &w(&[1, 1, 1])).unwrap(),
        QTLaurent::from_int_terms(&[(0, 1, 1), (0, 2, 1)])
    );
    assert!(lusztig_t_analog(&w(&[0, 1]), &w(&[1, 0])).is_err());
}

#[test]
fn lusztig_at_one_is_weight_multiplicity() {
    for n in 1..=4 {
        for size in 0..=6 {
            let parts: Vec<Partition> = partitions_of(size).into_iter().filter(|l| l.len() <= n).collect();
            for lam in &parts {
                for mu in &parts {
                    let k = lusztig_t_analog(&Weight::from_partition(lam, n).unwrap(), &Weight::from_partition(mu, n).unwrap())
                        .unwrap();
                    assert_eq!(k.eval(&c(1), &c(1)).unwrap(), c(ssyt_count(lam, mu.parts()) as i64), "K{}{}", lam, mu);
                    assert!(k.has_nonneg_integer_coeffs());
                }
            }
        }
    }
}

#[test]
fn degree_cap() {
    assert!(modified_macdonald(&Partition::row(9)).is_err());
}
