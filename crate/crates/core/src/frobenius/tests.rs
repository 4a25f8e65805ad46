use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::poly::PolynomialRing;
use crate::testutil::{graded_colength_by_degree, graded_piece_dim, DenseSpan};

fn quotient(p: u64, names: &[&str], rels: &[&str]) -> QuotientRingSpec {
    let s = PolynomialRing::grevlex(p, names).unwrap();
    QuotientRingSpec::new(Ideal::parse(&s, rels).unwrap()).unwrap()
}

fn poly(r: &QuotientRingSpec, f: &str) -> Polynomial {
    r.ambient().parse(f).unwrap()
}

fn quadric_params() -> SuitableParams {
    let r = quotient(3, &["x", "y", "z"], &["x*y - z^2"]);
    SuitableParams {
        j1: r.parse_ideal(&["x"]).unwrap(),
        m: 1,
        x: vec![poly(&r, "x"), poly(&r, "y")],
        a2: Some(poly(&r, "x")),
        a3: Some(poly(&r, "x")),
        u: poly(&r, "z"),
        k1: None,
        sat: None,
        ring: r,
    }
}

fn twisted_cubic_params() -> SuitableParams {
    let r = quotient(7, &["s", "t", "u", "v"], &["s*u - t^2", "s*v - t*u", "t*v - u^2"]);
    SuitableParams {
        j1: r.parse_ideal(&["s", "t"]).unwrap(),
        m: 3,
        x: vec![poly(&r, "s"), poly(&r, "v")],
        a2: Some(poly(&r, "t")),
        a3: Some(poly(&r, "s^2")),
        u: poly(&r, "u"),
        k1: None,
        sat: None,
        ring: r,
    }
}

fn regular_params(p: u64, names: &[&str]) -> SuitableParams {
    let s = PolynomialRing::grevlex(p, names).unwrap();
    let r = QuotientRingSpec::polynomial(&s);
    SuitableParams {
        j1: r.ideal(vec![s.var(0)]).unwrap(),
        m: 1,
        x: s.vars(),
        a2: Some(s.var(0)),
        a3: Some(s.var(0)),
        u: s.one(),
        k1: None,
        sat: None,
        ring: r,
    }
}

/// `λ(S/(P + gens))` by graded linear algebra, for homogeneous data.
fn dense_colength(r: &QuotientRingSpec, gens: &[Polynomial]) -> u64 {
    let mut all = r.defining_ideal().generators().to_vec();
    all.extend(gens.iter().cloned());
    graded_colength_by_degree(r.ambient(), &all)
}

fn frob_gens(gens: &[Polynomial], q: u64) -> Vec<Polynomial> {
    gens.iter().map(|g| g.frobenius(q).unwrap()).collect()
}

/// `λ(R/(I : f)) = λ(R/I) - λ(R/(I, f))`, from `0 → R/(I:f) → R/I → R/(I,f) → 0`.
fn colon_colength_oracle(r: &QuotientRingSpec, gens: &[Polynomial], f: &Polynomial) -> u64 {
    let mut with_f = gens.to_vec();
    with_f.push(f.clone());
    dense_colength(r, gens) - dense_colength(r, &with_f)
}

#[test]
fn suitable_data_validates() {
    quadric_params().validate().unwrap();
    twisted_cubic_params().validate().unwrap();
    regular_params(5, &["x", "y"]).validate().unwrap();

    let mut bad = quadric_params();
    bad.u = poly(&bad.ring, "x");
    assert!(matches!(bad.validate(), Err(AlgebraError::InvalidSuitableData(_))));
    let mut bad = quadric_params();
    bad.x = vec![poly(&bad.ring, "y"), poly(&bad.ring, "x")];
    assert!(matches!(bad.validate(), Err(AlgebraError::InvalidSuitableData(_))));
    let mut bad = twisted_cubic_params();
    bad.u = poly(&bad.ring, "1");
    assert!(matches!(bad.validate(), Err(AlgebraError::InvalidSuitableData(_))));
    let mut bad = twisted_cubic_params();
    bad.x.pop();
    assert!(matches!(bad.validate(), Err(AlgebraError::InvalidSuitableData(_))));
}

#[test]
fn tight_closure_evidence() {
    let s = PolynomialRing::grevlex(5, &["x", "y"]).unwrap();
    let r = QuotientRingSpec::polynomial(&s);
    let i = r.parse_ideal(&["x^2", "y^2"]).unwrap();
    let one = s.one();
    assert_eq!(tc_member(&r, &s.parse("x*y").unwrap(), &i, &one, 3).unwrap(), TcVerdict::NotInClosure(1));
    assert_eq!(tc_member(&r, &s.parse("x^3 + y^2").unwrap(), &i, &one, 3).unwrap(), TcVerdict::InClosureUpTo(3));
    assert!(matches!(tc_member(&r, &one, &i, &s.zero(), 2), Err(AlgebraError::InvalidTestElement)));

    // z^2 ∈ (x, y)* on the cubic cone; x^2 is a Jacobian test element.
    let cone = quotient(7, &["x", "y", "z"], &["x^3 + y^3 + z^3"]);
    let i = cone.parse_ideal(&["x", "y"]).unwrap();
    let c = poly(&cone, "x^2");
    let z2 = poly(&cone, "z^2");
    assert_eq!(tc_member(&cone, &z2, &i, &c, 2).unwrap(), TcVerdict::InClosureUpTo(2));
    assert_eq!(tc_member(&cone, &poly(&cone, "z"), &i, &c, 2).unwrap(), TcVerdict::NotInClosure(1));
    let gens = [poly(&cone, "x"), poly(&cone, "y")];
    let mut span_gens = cone.defining_ideal().generators().to_vec();
    span_gens.extend(frob_gens(&gens, 7));
    let span = DenseSpan::new(cone.ambient(), &span_gens, 16);
    assert!(span.contains(&c.mul(&z2.frobenius(7).unwrap()).unwrap()));
    assert!(!span.contains(&c.mul(&poly(&cone, "z").frobenius(7).unwrap()).unwrap()));
}

#[test]
fn quadric_hilbert_kunz_rows() {
    let sp = quadric_params();
    let r = &sp.ring;
    let params = r.parse_ideal(&["x", "y"]).unwrap();
    let rep = hk_estimate(r, &params, 3).unwrap();
    for row in &rep.rows {
        // R is Cohen–Macaulay with e(x, y) = 2.
        assert_eq!(row.length, 2 * row.q * row.q);
        assert_eq!(row.ratio, Ratio::from_integer(2));
    }
    let m = r.maximal().unwrap();
    let rep = hk_estimate(r, &m, 3).unwrap();
    for row in &rep.rows {
        assert_eq!(row.length, (3 * row.q * row.q - 1) / 2);
    }
    for row in &rep.rows[..2] {
        let oracle = dense_colength(r, &frob_gens(&r.ambient().vars(), row.q));
        assert_eq!(row.length, oracle);
    }
    let json = serde_json::to_value(&rep.rows[0]).unwrap();
    assert_eq!(json["ratio"], "13/9");
    assert!(matches!(hk_estimate(r, &r.parse_ideal(&["x"]).unwrap(), 1), Err(AlgebraError::NotPrimary)));
}

#[test]
fn degeneracy_chain_matches_exact_sequence_oracle() {
    let sp = quadric_params();
    let r = &sp.ring;
    let chain = degeneracy_chain(&sp, 1, 3).unwrap();
    assert!(chain.stabilized);
    assert_eq!(chain.stabilization_index, 1);
    for t in 1..=3u32 {
        let it = sp.i_t(t).unwrap();
        let gens = frob_gens(&r.own_generators(&it).unwrap(), 3);
        let ut = sp.u_t(t).unwrap().frobenius(3).unwrap();
        let oracle = colon_colength_oracle(r, &gens, &ut);
        assert_eq!(r.colength(&chain.steps[t as usize - 1]).unwrap(), Length::Finite(oracle));
    }
    // λ(R/I_1) = 2q^2 - (3q^2 - 1)/2 = (q^2 + 1)/2 at q = 3.
    assert_eq!(r.colength(chain.candidate()).unwrap(), Length::Finite(5));

    let reg = regular_params(5, &["x", "y"]);
    let chain = degeneracy_chain(&reg, 1, 2).unwrap();
    assert!(chain.candidate().same_ideal(&reg.ring.parse_ideal(&["x^5", "y^5"]).unwrap()).unwrap());
    assert!(matches!(degeneracy_chain(&reg, 1, 1), Err(AlgebraError::InvalidRange(_))));
}

#[test]
fn twisted_cubic_chain_is_ascending() {
    let sp = twisted_cubic_params();
    let r = &sp.ring;
    let chain = degeneracy_chain(&sp, 1, 3).unwrap();
    for w in chain.steps.windows(2) {
        assert!(w[1].contains_ideal(&w[0]).unwrap());
    }
    for t in 1..=2u32 {
        let gens = frob_gens(&r.own_generators(&sp.i_t(t).unwrap()).unwrap(), 7);
        let ut = sp.u_t(t).unwrap().frobenius(7).unwrap();
        let oracle = colon_colength_oracle(r, &gens, &ut);
        assert_eq!(r.colength(&chain.steps[t as usize - 1]).unwrap(), Length::Finite(oracle));
    }
}

#[test]
fn fsig_and_relative_hk_agree_on_gorenstein_entries() {
    let sp = quadric_params();
    let fs = fsig_estimate(&sp, 2, 2).unwrap();
    let wy = watanabe_yoshida_check(&sp, 2, 2, 1).unwrap();
    let expected = [5u64, 41];
    for ((row, w), want) in fs.rows.iter().zip(&wy).zip(expected) {
        assert_eq!(row.degeneracy_length, Some(want));
        assert!(w.equal && w.stabilized);
        assert_eq!(w.relative_hk, want);
        let s = row.s_e.unwrap();
        assert!(s > Ratio::from_integer(0) && s <= Ratio::from_integer(1));
        assert_eq!(s, Ratio::new(row.q as i128 * row.q as i128 + 1, 2 * row.q as i128 * row.q as i128));
    }
    let chains: Vec<_> = (1..=2).map(|e| degeneracy_chain(&sp, e, 2).unwrap()).collect();
    for (_, first, second) in chain_properties(&sp, &chains).unwrap() {
        assert!(first);
        assert_ne!(second, Some(false));
    }

    let reg = regular_params(5, &["x", "y"]);
    for row in fsig_estimate(&reg, 2, 2).unwrap().rows {
        assert_eq!(row.s_e, Some(Ratio::from_integer(1)));
    }
    for w in watanabe_yoshida_check(&reg, 2, 2, 1).unwrap() {
        assert!(w.equal);
        assert_eq!(w.relative_hk, w.degeneracy_length);
    }
}

#[test]
fn relative_hk_bound_on_quadric() {
    let sp = quadric_params();
    let r = &sp.ring;
    let i = r.parse_ideal(&["x", "y"]).unwrap();
    let j = r.maximal().unwrap();
    for e in 1..=2 {
        let de = degeneracy_chain(&sp, e, 2).unwrap();
        assert!(relative_hk_bound_check(r, de.candidate(), &i, &j, e).unwrap());
    }
    assert!(relative_hk_bound_check(r, &i, &j, &i, 1).is_err());
}

#[test]
fn colon_lemma_principal_and_quadric() {
    let reg = regular_params(5, &["x", "y"]);
    let rep = colon_lemma_check(&reg, 1, &[2], 0).unwrap();
    assert_eq!(rep.part1, PartVerdict::Holds(true));
    assert_eq!(rep.part2, PartVerdict::Holds(true));

    let sp = quadric_params();
    let rep = colon_lemma_check(&sp, 1, &[2], 0).unwrap();
    assert_eq!(rep.part1, PartVerdict::Holds(true));
    let rep = colon_lemma_check(&sp, 1, &[3], 0).unwrap();
    assert_eq!(rep.part1, PartVerdict::Holds(true));

    // With N_2 = 3 the middle and right sides differ in shape; their
    // colengths come from the exact-sequence oracle.
    let r = &sp.ring;
    let y = poly(r, "y");
    let mid = vec![poly(r, "x^3"), y.pow(9)];
    let right = vec![poly(r, "x^3"), y.pow(6)];
    let lm = colon_colength_oracle(r, &mid, &y.pow(6));
    let lr = colon_colength_oracle(r, &right, &y.pow(3));
    assert_eq!(lm, lr);
    let engine = r.colon(&r.ideal(mid).unwrap(), &y.pow(6)).unwrap();
    assert_eq!(r.colength(&engine).unwrap(), Length::Finite(lm));

    let mut no_a2 = quadric_params();
    no_a2.a2 = None;
    assert!(matches!(colon_lemma_check(&no_a2, 1, &[2], 0), Err(AlgebraError::HypothesisFailed(_))));
    let mut wrong = quadric_params();
    wrong.a2 = Some(poly(&wrong.ring, "x^2"));
    assert!(matches!(colon_lemma_check(&wrong, 1, &[2], 0), Err(AlgebraError::HypothesisFailed(_))));
    assert!(matches!(colon_lemma_check(&sp, 1, &[1], 0), Err(AlgebraError::InvalidRange(_))));
    assert_eq!(colon_lemma_check(&sp, 1, &[2, 2], 0).unwrap(), colon_lemma_check(&sp, 1, &[2], 0).unwrap());
    assert!(matches!(colon_lemma_check(&sp, 1, &[2, 2, 2], 0), Err(AlgebraError::InvalidRange(_))));
}

#[test]
fn colon_lemma_on_twisted_cubic() {
    let sp = twisted_cubic_params();
    assert_eq!(sp.a2_condition().unwrap(), Some(true));
    let rep = colon_lemma_check(&sp, 1, &[2], 0).unwrap();
    let r = &sp.ring;
    let q = 7u64;
    let v = poly(r, "v");
    let sym = sp.symbolic_j1(7).unwrap();
    let bracket = r.bracket_power(&sp.j1, q).unwrap();
    let with = |base: &Ideal, top: u64| {
        let mut g = r.own_generators(base).unwrap();
        g.push(v.pow(top * q));
        g
    };
    let sides = [(with(&sym, 2), q), (with(&bracket, 2), q)];
    let lens: Vec<u64> = sides.iter().map(|(g, k)| colon_colength_oracle(r, g, &v.pow(*k))).collect();
    let part1_oracle = lens[0] == lens[1]
        && r.colon(&r.ideal(sides[1].0.clone()).unwrap(), &v.pow(q))
            .unwrap()
            .contains_ideal(&r.colon(&r.ideal(sides[0].0.clone()).unwrap(), &v.pow(q)).unwrap())
            .unwrap();
    assert_eq!(rep.part1, PartVerdict::Holds(part1_oracle));
    assert!(matches!(rep.part2, PartVerdict::Holds(_)));
}

#[test]
fn ext_annihilation_tables() {
    let sp = twisted_cubic_params();
    assert!(ext_annihilation_check(&sp, 1, 0..=5).unwrap().is_empty());
    let reg = regular_params(5, &["a", "b", "c", "d"]);
    let rows = ext_annihilation_check(&reg, 1, 0..=5).unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].j, 2);
    assert_eq!(rows[0].annihilates, vec![true; 3]);
}

#[test]
fn ext_iso_hilbert_functions() {
    let reg = regular_params(5, &["x", "y"]);
    for i in 0..=2 {
        let rep = ext_iso_hilbert_check(&reg, i, 6).unwrap();
        assert!(rep.agree, "{rep:?}");
    }
    let sp = quadric_params();
    for i in 0..=1 {
        assert!(ext_iso_hilbert_check(&sp, i, 6).unwrap().agree);
    }
    let tc = twisted_cubic_params();
    let rep = ext_iso_hilbert_check(&tc, 0, 6).unwrap();
    assert!(rep.agree, "{rep:?}");
}

fn random_invertible_change(rng: &mut ChaCha8Rng, r: &QuotientRingSpec, gens: &[Polynomial]) -> Vec<Polynomial> {
    let p = r.ambient().characteristic() as u64;
    let mut out = gens.to_vec();
    for k in 1..out.len() {
        let c = rng.gen_range(0..p);
        let add = out[0].scale(c as u32);
        out[k] = out[k].add(&add).unwrap();
    }
    let c = rng.gen_range(0..p);
    let add = out[1].scale(c as u32);
    out[0] = out[0].add(&add).unwrap();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn bracket_lengths_ignore_generating_set(seed in any::<u64>()) {
        let sp = quadric_params();
        let r = &sp.ring;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = vec![poly(r, "x"), poly(r, "y"), poly(r, "z^2")];
        let alt = random_invertible_change(&mut rng, r, &gens);
        let a = hk_estimate(r, &r.ideal(gens).unwrap(), 2).unwrap();
        let b = hk_estimate(r, &r.ideal(alt).unwrap(), 2).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn tc_refutations_are_monotone(a in 0u32..3, b in 0u32..3, c in 0u32..3) {
        let cone = quotient(5, &["x", "y", "z"], &["x^3 + y^3 + z^3"]);
        let i = cone.parse_ideal(&["x", "y"]).unwrap();
        let f = poly(&cone, &format!("x^{a}*y^{b}*z^{c}"));
        let t = poly(&cone, "x^2");
        let short = tc_member(&cone, &f, &i, &t, 1).unwrap();
        let long = tc_member(&cone, &f, &i, &t, 2).unwrap();
        if let TcVerdict::NotInClosure(e) = short {
            prop_assert_eq!(long, TcVerdict::NotInClosure(e));
        }
    }
}

#[test]
fn twisted_cubic_ext_iso_against_graded_oracle() {
    let tc = twisted_cubic_params();
    let r = &tc.ring;
    let rep = ext_iso_hilbert_check(&tc, 1, 6).unwrap();
    assert!(rep.agree);
    // x_1 K_1^(3) / x_1^4 J_1, one graded piece at a time.
    let top = r.product(&r.ideal(vec![poly(r, "s")]).unwrap(), &tc.symbolic_anticanonical(3).unwrap()).unwrap();
    let bottom = r.product(&r.ideal(vec![poly(r, "s^4")]).unwrap(), &tc.j1).unwrap();
    let s = r.ambient();
    let diff: Vec<u64> = (0..20)
        .map(|d| (graded_piece_dim(s, bottom.generators(), d) - graded_piece_dim(s, top.generators(), d)) as u64)
        .collect();
    let start = diff.iter().position(|&v| v != 0).unwrap();
    assert_eq!(rep.ext_side, diff[start..start + 6].to_vec());
}
