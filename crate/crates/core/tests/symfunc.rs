use std::collections::BTreeMap;

use qtforge::partitions::{partitions_of, MultiPartition, Partition, Var};
use qtforge::qtfield::{Coeff, Mono, QTLaurent, QTRational};
use qtforge::symfunc::*;

fn p(v: &[usize]) -> Partition {
    Partition::from(v)
}

fn s(v: &[usize]) -> SchurExpansion {
    SchurExpansion::schur(&p(v))
}

fn int_combo(items: &[(&[usize], i64)]) -> SchurExpansion {
    SchurExpansion::from_int_map(&items.iter().map(|(k, v)| (p(k), *v)).collect())
}

/// Semistandard fillings of shape λ with content μ, filled cell by cell.
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
            if left[v - 1] == 0 {
                continue;
            }
            left[v - 1] -= 1;
            grid[r][c] = v;
            total += go(cells, k + 1, grid, left);
            left[v - 1] += 1;
        }
        grid[r][c] = 0;
        total
    }
    let cells: Vec<(usize, usize)> =
        (0..lambda.len()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&l| vec![0; l]).collect();
    go(&cells, 0, &mut grid, &mut content.to_vec())
}

#[test]
fn pieri_and_small_lr() {
    assert_eq!(s(&[1]).mul(&s(&[1])), int_combo(&[(&[2], 1), (&[1, 1], 1)]));
    let one = p(&[1]);
    let m = MultiPartition::new(vec![one.clone(), one.clone(), one]);
    assert_eq!(lr_coeff(&m, &p(&[2, 1])), 2);
}

#[test]
fn one_row_lr_is_kostka() {
    for n in 1..=5 {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let m = MultiPartition::new(mu.parts().iter().map(|&k| Partition::row(k)).collect());
                assert_eq!(lr_coeff(&m, &lambda), ssyt_count(&lambda, mu.parts()), "K_{}{}", lambda, mu);
            }
        }
    }
}

#[test]
fn lr_symmetry() {
    for n in 0..=6 {
        for lambda in partitions_of(n) {
            for k in 0..=n {
                for a in partitions_of(k) {
                    for b in partitions_of(n - k) {
                        let ab = lr_coeff(&MultiPartition::new(vec![a.clone(), b.clone()]), &lambda);
                        let ba = lr_coeff(&MultiPartition::new(vec![b.clone(), a.clone()]), &lambda);
                        assert_eq!(ab, ba);
                    }
                }
            }
        }
    }
}

#[test]
fn lr_dimension_count() {
    // induction from S_k × S_{n−k}: Σ_λ c^λ_{μν} f^λ = C(n,k) f^μ f^ν
    for n in 2..=7 {
        for k in 1..n {
            for a in partitions_of(k) {
                for b in partitions_of(n - k) {
                    let prod = lr_product(&a, &b);
                    let lhs: u128 = prod.iter().map(|(l, c)| *c as u128 * l.hook_length_count()).sum();
                    let binom: u128 = (1..=k as u128).fold(1, |acc, i| acc * (n as u128 - k as u128 + i) / i);
                    assert_eq!(lhs, binom * a.hook_length_count() * b.hook_length_count());
                }
            }
        }
    }
}

#[test]
fn power_sum_examples() {
    let p1 = BTreeMap::from([(p(&[1]), QTRational::one())]);
    assert_eq!(SchurExpansion::from_power_sums(&p1), s(&[1]));
    let p2 = BTreeMap::from([(p(&[2]), QTRational::one())]);
    let e = SchurExpansion::from_power_sums(&p2);
    assert_eq!(e, int_combo(&[(&[2], 1), (&[1, 1], -1)]));
    assert_eq!(e.inner_product(&e).unwrap(), QTRational::from_int(2));
}

#[test]
fn power_sum_round_trip() {
    for n in 0..=6 {
        for l in partitions_of(n) {
            let f = s(l.parts());
            assert_eq!(SchurExpansion::from_power_sums(&f.to_power_sums()), f);
        }
    }
}

#[test]
fn character_table_orthogonality() {
    for n in 1..=7 {
        let t = char_table(n);
        for a in 0..t.parts.len() {
            for b in 0..t.parts.len() {
                let mut sum = num_rational::BigRational::from_integer(0.into());
                for r in 0..t.parts.len() {
                    sum += num_rational::BigRational::new((t.chi[a][r] * t.chi[b][r]).into(), t.z[r].into());
                }
                assert_eq!(sum, num_rational::BigRational::from_integer(((a == b) as i64).into()));
            }
        }
    }
}

#[test]
fn inner_product_basics() {
    assert!(s(&[2]).inner_product(&s(&[1, 1])).unwrap().is_zero());
    assert!(s(&[2]).inner_product(&s(&[2])).unwrap().is_one());
    assert!(s(&[2]).inner_product(&s(&[1])).is_err());
    let f = int_combo(&[(&[3], 2), (&[2, 1], -1)]);
    let g = int_combo(&[(&[3], 1), (&[2, 1], 5), (&[1, 1, 1], 7)]);
    let h = int_combo(&[(&[1, 1, 1], 3), (&[2, 1], 1)]);
    assert_eq!(
        f.inner_product(&g.add(&h)).unwrap(),
        &f.inner_product(&g).unwrap() + &f.inner_product(&h).unwrap()
    );
    assert_eq!(f.inner_product(&g).unwrap(), QTRational::from_int(-3));
}

#[test]
fn plethysm_alphabet_examples() {
    for nu in [p(&[2, 1]), p(&[3, 1, 1]), p(&[2, 2])] {
        assert_eq!(s(&[1]).plethysm_alphabet(&nu.b_poly()), QTRational::from_laurent(nu.b_poly()));
    }
    let one_q = QTLaurent::from_int_terms(&[(0, 0, 1), (1, 0, 1)]);
    assert_eq!(s(&[1, 1]).plethysm_alphabet(&one_q), QTRational::from_laurent(QTLaurent::q()));
    let tn = QTLaurent::from_int_terms(&[(0, 0, 1), (0, 1, 1), (0, 2, 1)]);
    assert!(s(&[]).plethysm_alphabet(&tn).is_one());
}

fn det(m: Vec<Vec<QTLaurent>>) -> QTLaurent {
    let n = m.len();
    if n == 0 {
        return QTLaurent::one();
    }
    let mut total = QTLaurent::zero();
    for j in 0..n {
        let minor: Vec<Vec<QTLaurent>> =
            (1..n).map(|i| (0..n).filter(|&c| c != j).map(|c| m[i][c].clone()).collect()).collect();
        let term = &m[0][j] * &det(minor);
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

fn alternant_schur(l: &Partition, xs: &[Mono]) -> Option<QTLaurent> {
    let n = xs.len();
    if l.len() > n {
        return Some(QTLaurent::zero());
    }
    let mat = |shift: &dyn Fn(usize) -> usize| -> Vec<Vec<QTLaurent>> {
        (0..n).map(|i| xs.iter().map(|x| QTLaurent::mono(x.pow(shift(i) as i32))).collect()).collect()
    };
    let num = det(mat(&|i| l.part(i) + n - 1 - i));
    let den = det(mat(&|i| n - 1 - i));
    num.exact_div(&den)
}

#[test]
fn plethysm_matches_alternants() {
    let pool = [Mono::new(1, 0), Mono::new(0, 1), Mono::new(2, -1), Mono::new(1, 1), Mono::new(0, 0)];
    for n in 1..=4 {
        let xs = &pool[..n];
        let e = QTLaurent::from_terms(xs.iter().map(|m| (*m, Coeff::from_integer(1.into()))));
        for k in 0..=4 {
            for l in partitions_of(k) {
                let expect = alternant_schur(&l, xs).unwrap();
                assert_eq!(schur_at(&l, &e), expect, "s{} at {}", l, e);
            }
        }
    }
}

#[test]
fn plethysm_is_multiplicative() {
    let e = QTLaurent::from_int_terms(&[(1, 0, 1), (0, 1, 2), (1, -1, -1)]);
    let (f, g) = (int_combo(&[(&[2], 1), (&[1, 1], 3)]), int_combo(&[(&[2, 1], 1), (&[3], -2)]));
    assert_eq!(f.mul(&g).plethysm_alphabet(&e), &f.plethysm_alphabet(&e) * &g.plethysm_alphabet(&e));
}

#[test]
fn pleth_scale_round_trip() {
    for n in 0..=5 {
        for l in partitions_of(n) {
            let f = s(l.parts());
            let g = f.pleth_scale(&PlethFactor::one_minus_t()).pleth_scale(&PlethFactor::over_one_minus_t());
            assert_eq!(g, f);
            let g = f.pleth_scale(&PlethFactor::over_one_minus_q()).pleth_scale(&PlethFactor::one_minus_q());
            assert_eq!(g, f);
        }
    }
}

#[test]
fn triv_and_sign_deltas() {
    for n in 1..=6 {
        for mu in partitions_of(n) {
            let f = s(mu.parts()).pleth_scale(&PlethFactor::over_one_minus_t());
            let triv = f.coeff(&Partition::row(n));
            let expect = QTRational::from_laurent(QTLaurent::mono(Mono::new(0, mu.n_stat() as i32)))
                .div_ref(&QTRational::from_laurent(mu.hook_poly(Var::T)))
                .unwrap();
            assert_eq!(triv, expect);
            let mc = mu.conjugate();
            let sign = f.coeff(&Partition::column(n));
            let expect = QTRational::from_laurent(QTLaurent::mono(Mono::new(0, mc.n_stat() as i32)))
                .div_ref(&QTRational::from_laurent(mc.hook_poly(Var::T)))
                .unwrap();
            assert_eq!(sign, expect);
        }
    }
}

#[test]
fn pleth_coeff_agrees_with_matrix() {
    let f = PlethFactor(vec![(Mono::q(), 1), (Mono::t(), -1)]);
    let parts = partitions_of(4);
    let m = pleth_matrix(4, &f);
    for (i, a) in parts.iter().enumerate() {
        for (j, b) in parts.iter().enumerate() {
            assert_eq!(pleth_coeff(a, b, &f), m[i][j]);
        }
    }
}

#[test]
fn json_round_trip() {
    let f = int_combo(&[(&[2, 1], 3), (&[3], -1)]).scale(&QTRational::from_laurent(QTLaurent::q()));
    let js = serde_json::to_string(&f).unwrap();
    assert!(js.contains("\"partition\":[2,1]"));
    let back: SchurExpansion = serde_json::from_str(&js).unwrap();
    assert_eq!(back, f);
}
