use qtforge::partitions::*;
use qtforge::qtfield::{c, QTLaurent};

fn p(v: &[usize]) -> Partition {
    Partition::from(v)
}

#[test]
fn arm_leg_hook_examples() {
    let mu = p(&[4, 3, 1]);
    assert_eq!(mu.arm_leg_hook((1, 0)).unwrap().2, 4);
    assert_eq!(mu.arm_leg_hook((0, 0)).unwrap(), (3, 2, 6));
    assert_eq!(p(&[1]).arm_leg_hook((0, 0)).unwrap(), (0, 0, 1));
    assert!(mu.arm_leg_hook((3, 1)).is_err());
}

#[test]
fn b_poly_and_n_stat() {
    assert!(Partition::empty().b_poly().is_zero());
    assert_eq!(p(&[2, 1]).b_poly(), QTLaurent::from_int_terms(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]));
    let col: Vec<(i32, i32, i64)> = (0..5).map(|j| (0, j, 1)).collect();
    assert_eq!(Partition::column(5).b_poly(), QTLaurent::from_int_terms(&col));
    assert_eq!(p(&[4, 3, 1]).n_stat(), 5);
    assert_eq!(Partition::row(6).n_stat(), 0);
    assert_eq!(Partition::column(6).n_stat(), 15);
}

#[test]
fn b_poly_t_derivative_is_n() {
    for n in 0..=8 {
        for mu in partitions_of(n) {
            let d: i64 = mu.b_poly().terms().iter().map(|(m, _)| (m.t2 / 2) as i64).sum();
            assert_eq!(d, mu.n_stat() as i64);
        }
    }
}

#[test]
fn hook_polynomials() {
    let h = p(&[2]).hook_poly(Var::T);
    assert_eq!(h, QTLaurent::from_int_terms(&[(0, 0, 1), (0, 1, -1), (0, 2, -1), (0, 3, 1)]));
    assert_eq!(p(&[1]).hook_poly(Var::T), QTLaurent::from_int_terms(&[(0, 0, 1), (0, 1, -1)]));
    for n in 1..=8 {
        for mu in partitions_of(n) {
            assert_eq!(mu.hook_poly(Var::T), mu.conjugate().hook_poly(Var::T));
            assert_eq!(mu.conjugate().conjugate(), mu);
            assert_eq!(mu.conjugate().size(), n);
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn syt_counts() {
    assert_eq!(syt_enumerate(&Partition::row(5)).len(), 1);
    assert_eq!(syt_enumerate(&p(&[2, 1])).len(), 2);
    for n in 0..=8 {
        let mut total = 0u128;
        for mu in partitions_of(n) {
            let ts = syt_enumerate(&mu);
            assert_eq!(ts.len() as u128, mu.hook_length_count());
            assert!(ts.iter().all(|t| t.is_standard()));
            total += (ts.len() as u128).pow(2);
        }
        assert_eq!(total, (1..=n as u128).product::<u128>());
    }
}

#[test]
fn syt_of_square_by_brute_force() {
    // all 4! fillings of (2,2), keep the standard ones
    let shape = p(&[2, 2]);
    let cells = shape.cells();
    let mut count = 0;
    let mut perm = vec![0, 1, 2, 3];
    let mut found = Vec::new();
    loop {
        let mut rows = vec![vec![0; 2]; 2];
        for (k, &idx) in perm.iter().enumerate() {
            let (i, j) = cells[idx];
            rows[j][i] = k + 1;
        }
        let ok = rows.iter().all(|r| r[0] < r[1]) && rows[1][0] > rows[0][0] && rows[1][1] > rows[0][1];
        if ok {
            count += 1;
            found.push(rows);
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    assert_eq!(count, 2);
    let got: Vec<Vec<Vec<usize>>> = syt_enumerate(&shape).iter().map(|t| t.rows().to_vec()).collect();
    found.sort();
    assert_eq!(got, found);
}

fn next_perm(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[test]
fn tableau_chain() {
    for t in syt_enumerate(&p(&[3, 2])) {
        let ch = t.chain();
        for k in 1..=5 {
            assert_eq!(ch[k].size(), k);
            let (i, j) = t.cell_of(k);
            assert!(ch[k].contains((i, j)) && !ch[k - 1].contains((i, j)));
        }
    }
}

#[test]
fn core_examples() {
    let mu = p(&[4, 3, 3, 1]);
    assert_eq!(r_core_quotient_sign(&mu, 4, mu.len()).unwrap().core, p(&[2, 1]));
    assert_eq!(rim_hook_core_oracle(&mu, 4), p(&[2, 1]));
    for n in 0..=6 {
        for mu in partitions_of(n) {
            let cq = r_core_quotient_sign(&mu, 1, mu.len()).unwrap();
            assert!(cq.core.is_empty());
            assert_eq!(cq.sign, 1);
            assert_eq!(cq.quotient.components, vec![mu.clone()]);
        }
    }
    for k in 0..5 {
        assert!(rim_hook_core_oracle(&Partition::row(3 * k), 3).is_empty());
    }
}

#[test]
fn core_211_mod_2() {
    let mu = p(&[2, 1, 1]);
    let cq = r_core_quotient_sign(&mu, 2, 3).unwrap();
    assert!(cq.core.is_empty());
    assert_eq!(cq.quotient.size(), 2);
    let (quo, sign) = literal_quotient(&mu, 2, 4);
    assert_eq!(cq.quotient.components, quo);
    assert_eq!(cq.sign, sign);
}

/// The defining condition read literally: search all s ∈ S_m for which
/// μ+ρ − s·(core+ρ) ∈ rℕ^m with weakly decreasing subsequences, and label by
/// s·(core+ρ)_i ≡ j − m (mod r). Several s can qualify; keep the shortest.
fn literal_quotient(mu: &Partition, r: usize, m: usize) -> (Vec<Partition>, i32) {
    let core = rim_hook_core_oracle(mu, r);
    let b: Vec<i64> = (0..m).map(|i| (mu.part(i) + m - 1 - i) as i64).collect();
    let cb: Vec<i64> = (0..m).map(|i| (core.part(i) + m - 1 - i) as i64).collect();
    let mut perm: Vec<usize> = (0..m).collect();
    let mut sols = Vec::new();
    loop {
        let sc: Vec<i64> = perm.iter().map(|&k| cb[k]).collect();
        if (0..m).all(|i| b[i] >= sc[i] && (b[i] - sc[i]) % r as i64 == 0) {
            let mut comps = vec![Vec::new(); r];
            for i in 0..m {
                let j = ((sc[i] + m as i64) % r as i64) as usize;
                comps[j].push(((b[i] - sc[i]) / r as i64) as usize);
            }
            if comps.iter().all(|v| v.windows(2).all(|w| w[0] >= w[1])) {
                let parts = comps.into_iter().map(|v| Partition::new(v).unwrap()).collect();
                sols.push((inversions(&perm), parts, permutation_sign(&perm)));
            }
        }
        if !next_perm(&mut perm) {
            break;
        }
    }
    let best = sols.iter().map(|x| x.0).min().unwrap();
    sols.retain(|x| x.0 == best);
    assert_eq!(sols.len(), 1, "shortest decomposition not unique for {}", mu);
    let (_, q, s) = sols.pop().unwrap();
    (q, s)
}

fn inversions(p: &[usize]) -> usize {
    (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count()
}

#[test]
fn quotient_hooks_are_the_divisible_hooks() {
    for n in 0..=8 {
        for mu in partitions_of(n) {
            for r in 2..=4 {
                let cq = r_core_quotient_sign(&mu, r, mu.len()).unwrap();
                let mut want: Vec<usize> = mu.hooks().into_iter().filter(|h| h % r == 0).collect();
                let mut got: Vec<usize> =
                    cq.quotient.components.iter().flat_map(|q| q.hooks()).map(|h| h * r).collect();
                want.sort();
                got.sort();
                assert_eq!(got, want, "{} r={}", mu, r);
            }
        }
    }
}

#[test]
fn quotient_matches_literal_definition() {
    for r in [2, 3] {
        for n in (r..=6).step_by(r) {
            for mu in partitions_of(n) {
                let cq = r_core_quotient_sign(&mu, r, n).unwrap();
                let (quo, sign) = literal_quotient(&mu, r, n);
                assert_eq!(cq.quotient.components, quo, "{} r={}", mu, r);
                assert_eq!(cq.sign, sign, "{} r={}", mu, r);
            }
        }
    }
}

#[test]
fn core_quotient_invariants() {
    for n in 0..=8 {
        for mu in partitions_of(n) {
            for r in 1..=4 {
                let base = r_core_quotient_sign(&mu, r, mu.len()).unwrap();
                assert_eq!(base.core, rim_hook_core_oracle(&mu, r), "{} r={}", mu, r);
                assert_eq!(n, base.core.size() + r * base.quotient.size());
                assert_eq!(base.quotient.r(), r);
                for extra in 1..=2 * r {
                    assert_eq!(r_core_quotient_sign(&mu, r, mu.len() + extra).unwrap(), base);
                }
            }
        }
    }
}

#[test]
fn sign_is_multiplicative_along_rim_hooks() {
    for n in 0..=8 {
        for mu in partitions_of(n) {
            for r in 2..=4 {
                let s = r_core_quotient_sign(&mu, r, mu.len()).unwrap().sign;
                for (nu, rows) in removable_rim_hooks(&mu, r) {
                    let s2 = r_core_quotient_sign(&nu, r, nu.len()).unwrap().sign;
                    let flip = if rows % 2 == 1 { 1 } else { -1 };
                    assert_eq!(s, flip * s2, "{} -> {} r={}", mu, nu, r);
                }
            }
        }
    }
}

#[test]
fn content_divisibility_for_empty_core() {
    for r in 1..=4 {
        for k in 0..=3 {
            for mu in empty_core_partitions(r, r * k) {
                let d = mu.n_stat() as i64 - mu.conjugate().n_stat() as i64;
                assert_eq!(d, -mu.content_sum());
                let m = if r % 2 == 1 { r } else { r / 2 } as i64;
                assert_eq!(d % m, 0, "{} r={}", mu, r);
            }
        }
    }
}

#[test]
fn dominance() {
    assert!(p(&[1, 1]).dominance_le(&p(&[2])).unwrap());
    assert!(!p(&[2]).dominance_le(&p(&[1, 1])).unwrap());
    for mu in partitions_of(6) {
        assert!(mu.dominance_le(&mu).unwrap());
    }
    assert!(p(&[2]).dominance_le(&p(&[2, 1])).is_err());
}

#[test]
fn serde_and_parse() {
    let mu = p(&[3, 1, 1]);
    assert_eq!(serde_json::to_string(&mu).unwrap(), "[3,1,1]");
    assert_eq!(Partition::parse("3,1,1").unwrap(), mu);
    assert!(Partition::parse("1,3").is_err());
    assert!(Partition::parse("a").is_err());
    let _ = c(0);
}
