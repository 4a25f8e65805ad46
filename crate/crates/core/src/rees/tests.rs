use num_rational::Ratio;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::testutil::{poly_from_exps, MonoIdeal};

fn poly_ring(p: u64, names: &[&str]) -> QuotientRingSpec {
    QuotientRingSpec::polynomial(&PolynomialRing::grevlex(p, names).unwrap())
}

fn quadric() -> QuotientRingSpec {
    let s = PolynomialRing::grevlex(3, &["x", "y", "z"]).unwrap();
    QuotientRingSpec::new(Ideal::parse(&s, &["x*y - z^2"]).unwrap()).unwrap()
}

/// Rank over Q of integer vectors.
fn rational_rank(rows: &[Vec<u32>]) -> usize {
    let mut m: Vec<Vec<Ratio<i64>>> =
        rows.iter().map(|r| r.iter().map(|&v| Ratio::from_integer(v as i64)).collect()).collect();
    let width = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..width {
        let Some(piv) = (rank..m.len()).find(|&i| m[i][col] != Ratio::from_integer(0)) else { continue };
        m.swap(rank, piv);
        let pivot = m[rank].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != rank && row[col] != Ratio::from_integer(0) {
                let c = row[col] / pivot[col];
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a -= c * b;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn principal_ideal_has_free_fiber() {
    let r = poly_ring(5, &["x", "y"]);
    let i = r.parse_ideal(&["x"]).unwrap();
    let rees = rees_presentation(&r, &i).unwrap();
    assert!(rees.t_only_relations().unwrap().is_empty());
    assert!(rees.substitution_check().unwrap());
    assert_eq!(analytic_spread(&r, &i).unwrap().spread, 1);
}

#[test]
fn koszul_relation_in_rees_ideal() {
    let r = poly_ring(5, &["x", "y"]);
    let i = r.parse_ideal(&["x", "y"]).unwrap();
    let rees = rees_presentation(&r, &i).unwrap();
    let ring = rees.ring();
    let rel = ring.parse("y*T1 - x*T2").unwrap();
    assert!(rees.ideal().contains(&rel).unwrap());
    assert!(rees.substitution_check().unwrap());
    let rep = analytic_spread(&r, &i).unwrap();
    assert_eq!(rep.spread, 2);
    assert!(rep.fiber_relations.is_empty());
}

#[test]
fn spread_examples() {
    let r = poly_ring(5, &["x", "y", "z"]);
    let i = r.parse_ideal(&["x*y", "x*z", "y*z"]).unwrap();
    let rees = rees_presentation(&r, &i).unwrap();
    assert!(rees.substitution_check().unwrap());
    assert_eq!(analytic_spread(&r, &i).unwrap().spread, rational_rank(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]));
    assert_eq!(analytic_spread(&r, &r.maximal().unwrap()).unwrap().spread, 3);

    let q = quadric();
    let m = q.maximal().unwrap();
    let rees = rees_presentation(&q, &m).unwrap();
    assert!(rees.substitution_check().unwrap());
    assert_eq!(analytic_spread(&q, &m).unwrap().spread, 2);
}

#[test]
fn spread_is_stable_under_powers() {
    let q = quadric();
    for gens in [vec!["x", "y", "z"], vec!["x", "z"], vec!["x", "y"]] {
        let i = q.parse_ideal(&gens).unwrap();
        let l = analytic_spread(&q, &i).unwrap().spread;
        for n in 2..=3 {
            assert_eq!(analytic_spread(&q, &q.power(&i, n).unwrap()).unwrap().spread, l, "{gens:?}^{n}");
        }
    }
}

#[test]
fn reduction_numbers() {
    let r = poly_ring(5, &["x", "y"]);
    let i = r.parse_ideal(&["x^2", "x*y", "y^2"]).unwrap();
    assert_eq!(reduction_number_check(&r, &i, &i, 3).unwrap(), ReductionVerdict::Number(0));
    let j = r.parse_ideal(&["x^2", "y^2"]).unwrap();
    let oracle_i = MonoIdeal::new(2, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    let oracle_j = MonoIdeal::new(2, vec![vec![2, 0], vec![0, 2]]);
    assert_ne!(oracle_j, oracle_i);
    assert_eq!(oracle_j.product(&oracle_i), oracle_i.product(&oracle_i));
    assert_eq!(reduction_number_check(&r, &j, &i, 3).unwrap(), ReductionVerdict::Number(1));

    let i = r.parse_ideal(&["x^2", "x*y"]).unwrap();
    let j = r.parse_ideal(&["x^3"]).unwrap();
    assert_eq!(reduction_number_check(&r, &j, &i, 4).unwrap(), ReductionVerdict::NotAReduction(4));
    // Leading terms of J I^N never reach x^{N+1} y^{N+1}.
    let oi = MonoIdeal::new(2, vec![vec![2, 0], vec![1, 1]]);
    let mut pow = MonoIdeal::new(2, vec![vec![0, 0]]);
    for _ in 0..=4 {
        let lhs = MonoIdeal::new(2, vec![vec![3, 0]]).product(&pow);
        pow = pow.product(&oi);
        assert_ne!(lhs, pow);
    }
    assert!(matches!(reduction_number_check(&r, &r.parse_ideal(&["y"]).unwrap(), &i, 2), Err(AlgebraError::NotASubideal)));

    // On the quadric (x, y) reduces m with number 1, and (x^n, y^n) reduces m^n within ℓ - 1.
    let q = quadric();
    let m = q.maximal().unwrap();
    assert_eq!(reduction_number_check(&q, &q.parse_ideal(&["x", "y"]).unwrap(), &m, 3).unwrap(), ReductionVerdict::Number(1));
    let l = analytic_spread(&q, &m).unwrap().spread as u32;
    for n in 2..=3u32 {
        let mn = q.power(&m, n).unwrap();
        let jn = q.parse_ideal(&[&format!("x^{n}"), &format!("y^{n}")]).unwrap();
        match reduction_number_check(&q, &jn, &mn, 4).unwrap() {
            ReductionVerdict::Number(k) => assert!(k < l),
            other => panic!("{other}"),
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn equigenerated_monomial_spread_is_exponent_rank(seed in any::<u64>()) {
        let r = poly_ring(5, &["x", "y", "z"]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let deg = rng.gen_range(1..=3u32);
        let count = rng.gen_range(1..=4usize).min(((deg + 1) * (deg + 2) / 2) as usize);
        let mut exps: Vec<Vec<u32>> = Vec::new();
        while exps.len() < count {
            let a = rng.gen_range(0..=deg);
            let b = rng.gen_range(0..=deg - a);
            let e = vec![a, b, deg - a - b];
            if !exps.contains(&e) {
                exps.push(e);
            }
        }
        let gens = exps.iter().map(|e| poly_from_exps(r.ambient(), e)).collect();
        let i = r.ideal(gens).unwrap();
        let rep = analytic_spread(&r, &i).unwrap();
        prop_assert_eq!(rep.spread, rational_rank(&exps));
    }

    #[test]
    fn spread_ignores_generating_set(seed in any::<u64>()) {
        let q = quadric();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s = q.ambient();
        let c: u32 = rng.gen_range(1..3);
        let alt = vec![s.parse("x").unwrap(), s.parse("x + z").unwrap().scale(c), s.parse("y + x").unwrap()];
        let a = analytic_spread(&q, &q.parse_ideal(&["x", "y", "z"]).unwrap()).unwrap().spread;
        let b = analytic_spread(&q, &q.ideal(alt).unwrap()).unwrap().spread;
        prop_assert_eq!(a, b);
    }
}
