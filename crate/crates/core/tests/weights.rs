use std::collections::BTreeSet;

use qtforge::partitions::{sub_partitions, Partition};
use qtforge::qtfield::QTLaurent;
use qtforge::weights::*;

fn w(c: &[i64]) -> Weight {
    Weight::from(c)
}

fn p(v: &[usize]) -> Partition {
    Partition::from(v)
}

fn combo(items: &[(&[usize], i64)]) -> ZCombo {
    items.iter().map(|(k, v)| (p(k), *v)).collect()
}

#[test]
fn dominant_rep_examples() {
    assert_eq!(dominant_rep(&w(&[1, 3, 2])).0, w(&[3, 2, 1]));
    assert_eq!(dominant_rep(&w(&[4, 2, -1])), (w(&[4, 2, -1]), 1));
    assert_eq!(dominant_rep(&w(&[0, 1])).1, 0);
}

#[test]
fn dominant_rep_sign_matches_bubble_sort() {
    let mut state: u64 = 0x2545F4914F6CDD1D;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..500 {
        let n = 1 + (next() % 6) as usize;
        let l: Vec<i64> = (0..n).map(|_| (next() % 9) as i64 - 4).collect();
        let mut v: Vec<i64> = (0..n).map(|i| l[i] + (n - 1 - i) as i64).collect();
        let distinct = v.iter().collect::<BTreeSet<_>>().len() == n;
        let mut swaps = 0;
        for i in 0..n {
            for j in 0..n - 1 - i {
                if v[j] < v[j + 1] {
                    v.swap(j, j + 1);
                    swaps += 1;
                }
            }
        }
        let want = if !distinct { 0 } else if swaps % 2 == 0 { 1 } else { -1 };
        assert_eq!(dominant_rep(&Weight::new(l.clone())).1, want, "{:?}", l);
    }
}

#[test]
fn psi_phi_examples() {
    let l = p(&[2, 2, 1]);
    assert_eq!(psi(&l, 4).unwrap(), combo(&[(&[2, 2, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1), (&[2, 1], 1)]));
    assert_eq!(
        phi(&l, 4).unwrap(),
        combo(&[
            (&[2, 2, 1], 1),
            (&[2, 2], -1),
            (&[2, 1, 1], -1),
            (&[2, 1], 1),
            (&[1, 1, 1], 1),
            (&[1, 1], -1)
        ])
    );
    assert!(psi(&p(&[1, 1, 1, 1]), 4).is_err());
}

#[test]
fn psi_phi_inverse_on_box() {
    for l in sub_partitions(&p(&[4, 4, 4])) {
        let unit: ZCombo = [(l.clone(), 1)].into_iter().collect();
        assert_eq!(phi_combo(&psi(&l, 4).unwrap(), 4).unwrap(), unit, "{}", l);
        assert_eq!(psi_combo(&phi(&l, 4).unwrap(), 4).unwrap(), unit, "{}", l);
    }
}

#[test]
fn star_examples() {
    assert_eq!(star(&Partition::empty(), 4).unwrap(), Weight::zero(4));
    assert_eq!(star(&p(&[1]), 4).unwrap(), w(&[1, 0, 0, -1]));
    for n in 2..=5 {
        let mut seen = BTreeSet::new();
        for mu in sub_partitions(&Partition::new(vec![4; n - 1]).unwrap()) {
            let s = star(&mu, n).unwrap();
            assert!(s.is_dominant() && s.size() == 0);
            assert!(seen.insert(s), "star not injective at {}", mu);
        }
    }
}

fn in_j(v: &Weight) -> bool {
    let n = v.n() as i64;
    v.is_dominant() && v.get(v.n() - 1) == 1 && v.size().rem_euclid(n) == 0
}

#[test]
fn dagger_examples_and_bijection() {
    assert_eq!(dagger(&Weight::zero(3)), w(&[1, 1, 1]));
    assert_eq!(dagger(&w(&[1, 0, 0, -1])), w(&[3, 2, 2, 1]));
    for n in 1..=5usize {
        // every dominant ν with entries in [1, 6], last entry 1, size divisible by n
        let mut js = Vec::new();
        let mut cur = vec![1i64; n];
        loop {
            let v = Weight::new(cur.clone());
            if in_j(&v) {
                js.push(v);
            }
            let mut i = 0;
            while i < n && cur[i] == 6 {
                cur[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            cur[i] += 1;
        }
        for v in js {
            let shift = v.size() / n as i64;
            let pre = Weight::new(v.coords().iter().map(|x| x - shift).collect());
            assert!(pre.is_dominant() && pre.size() == 0);
            assert_eq!(dagger(&pre), v);
        }
    }
    for mu in sub_partitions(&p(&[3, 3])) {
        assert!(in_j(&dagger(&star(&mu, 3).unwrap())));
    }
}

#[test]
fn inverse_pieri_example() {
    let e = inverse_pieri_set(&w(&[4, 2, -1]), 3);
    let listed: BTreeSet<Weight> = [
        [4, 2, -4],
        [4, 1, -3],
        [4, 0, -2],
        [3, 2, -3],
        [3, 1, -2],
        [3, 0, -1],
        [2, 2, -2],
        [2, 1, -1],
    ]
    .iter()
    .map(|c| w(c))
    .collect();
    assert!(listed.is_subset(&e));
    let extra: Vec<&Weight> = e.difference(&listed).collect();
    assert_eq!(extra, vec![&w(&[4, -1, -1])]);
    let mu = w(&[3, 1, 0]);
    assert_eq!(inverse_pieri_set(&mu, 0), BTreeSet::from([mu.clone()]));
}

#[test]
fn inverse_pieri_matches_star_of_strips() {
    for n in [3, 4] {
        for mu in sub_partitions(&p(&[3, 3])) {
            let e = inverse_pieri_set(&Weight::from_partition(&mu, n).unwrap(), mu.size());
            let left: BTreeSet<Weight> = e.iter().map(|x| x.neg_w0()).collect();
            let right: BTreeSet<Weight> =
                horizontal_strip_below(&mu).iter().map(|f| star(f, n).unwrap()).collect();
            assert_eq!(left, right, "{} n={}", mu, n);
        }
    }
}

#[test]
fn containment_reading_of_the_set_identity_fails() {
    let mu = p(&[1, 1]);
    let e = inverse_pieri_set(&Weight::from_partition(&mu, 3).unwrap(), 2);
    assert_eq!(e.len(), 2);
    assert_eq!(sub_partitions(&mu).len(), 3);
}

#[test]
fn kostant_small_values() {
    let r = RootDataA::new(3);
    assert!(kostant(&Weight::zero(3), KostantKind::QT).is_one());
    let a1 = r.root((0, 1));
    assert_eq!(kostant(&a1, KostantKind::QT), QTLaurent::from_int_terms(&[(1, 0, 1), (0, 1, 1)]));
    let want = QTLaurent::from_int_terms(&[(2, 0, 1), (1, 1, 2), (0, 2, 1), (1, 0, 1), (0, 1, 1)]);
    assert_eq!(kostant(&w(&[1, 0, -1]), KostantKind::QT), want);
    assert!(kostant(&w(&[-1, 1, 0]), KostantKind::QT).is_zero());
    assert!(kostant(&w(&[1, 0, 0]), KostantKind::QT).is_zero());
}

/// Direct enumeration: every multiplicity vector on the positive roots
/// whose weighted sum is γ contributes ∏ h_{k_α}(q,t).
fn brute_force(n: usize, g: &Weight) -> QTLaurent {
    let r = RootDataA::new(n);
    let roots: Vec<Weight> = r.positive_roots().into_iter().map(|a| r.root(a)).collect();
    let bound = g.coords().iter().map(|x| x.abs()).sum::<i64>() as usize;
    let mut total = QTLaurent::zero();
    let mut mult = vec![0usize; roots.len()];
    let h = |k: usize| QTLaurent::from_int_terms(&(0..=k as i32).map(|a| (a, k as i32 - a, 1)).collect::<Vec<_>>());
    loop {
        let mut s = Weight::zero(n);
        for (a, &k) in roots.iter().zip(&mult) {
            for _ in 0..k {
                s = &s + a;
            }
        }
        if &s == g {
            let mut term = QTLaurent::one();
            for &k in &mult {
                term = &term * &h(k);
            }
            total += &term;
        }
        let mut i = 0;
        while i < mult.len() && mult[i] == bound {
            mult[i] = 0;
            i += 1;
        }
        if i == mult.len() {
            break;
        }
        mult[i] += 1;
    }
    total
}

#[test]
fn kostant_against_enumeration() {
    for g in [w(&[2, 0, -2]), w(&[1, 1, -2]), w(&[2, -1, -1]), w(&[1, 0, 0, -1]), w(&[1, 1, -1, -1])] {
        assert_eq!(kostant(&g, KostantKind::QT), brute_force(g.n(), &g), "{}", g);
    }
    for a in 0..4 {
        for b in 0..4 {
            let g = Weight::from_simple_root_coords(&[a, b]);
            let v = kostant(&g, KostantKind::Classical);
            assert_eq!(v, QTLaurent::from_int(a.min(b) + 1));
        }
    }
}
