//! Prime fields, monomials, term orders and sparse polynomials.

mod field;
mod monomial;
mod polynomial;
mod ring;

pub use field::{field_arith, Coeff, FieldOp, PrimeField};
pub use monomial::{Monomial, MonomialOrder};
pub use polynomial::{poly_arith, PolyOp, PolyOperand, Polynomial};
pub use ring::PolynomialRing;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn random_poly(ring: &PolynomialRing, rng: &mut impl Rng, max_terms: usize, max_deg: u32) -> Polynomial {
        let n = ring.nvars();
        let p = ring.characteristic();
        let terms = (0..rng.gen_range(0..=max_terms))
            .map(|_| {
                let exps: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
                (Monomial::from_exponents(&exps), rng.gen_range(0..p))
            })
            .collect();
        Polynomial::from_terms(ring, terms)
    }

    #[test]
    fn freshman_examples() {
        let r3 = PolynomialRing::grevlex(3, &["x", "y"]).unwrap();
        let f = r3.parse("x + y").unwrap();
        assert_eq!(f.pow(3), r3.parse("x^3 + y^3").unwrap());
        let r2 = PolynomialRing::grevlex(2, &["x", "y"]).unwrap();
        let g = r2.parse("x + y").unwrap();
        assert_eq!(g.mul(&g).unwrap(), r2.parse("x^2 + y^2").unwrap());
        assert!(g.mul(&r2.zero()).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_detected() {
        let a = PolynomialRing::grevlex(3, &["x", "y"]).unwrap();
        let b = PolynomialRing::grevlex(5, &["x", "y"]).unwrap();
        assert!(a.var(0).add(&b.var(0)).is_err());
    }

    #[test]
    fn poly_arith_entry_point() {
        let r = PolynomialRing::grevlex(5, &["x", "y"]).unwrap();
        let f = r.parse("x + 2*y").unwrap();
        let g = poly_arith(PolyOp::Scale, &f, &PolyOperand::Scalar(3)).unwrap();
        assert_eq!(g, r.parse("3*x + y").unwrap());
        let h = poly_arith(PolyOp::Add, &f, &PolyOperand::Poly(r.parse("-x").unwrap())).unwrap();
        assert_eq!(h, r.parse("2*y").unwrap());
    }

    #[test]
    fn exact_division() {
        let r = PolynomialRing::grevlex(7, &["x", "y"]).unwrap();
        let f = r.parse("x^2 - y^2").unwrap();
        let g = r.parse("x - y").unwrap();
        assert_eq!(f.exact_div(&g).unwrap(), Some(r.parse("x + y").unwrap()));
        assert_eq!(r.parse("x^2 + y").unwrap().exact_div(&g).unwrap(), None);
    }

    /// Naive double loop accumulating into a dense exponent table.
    fn naive_mul(f: &Polynomial, g: &Polynomial) -> Polynomial {
        let field = f.ring().field();
        let mut acc: std::collections::HashMap<Vec<u32>, u32> = Default::default();
        for (m, a) in f.terms() {
            for (n, b) in g.terms() {
                let e: Vec<u32> = m.exponents().iter().zip(n.exponents()).map(|(x, y)| x + y).collect();
                let slot = acc.entry(e).or_insert(0);
                *slot = field.add(*slot, field.mul(*a, *b));
            }
        }
        Polynomial::from_terms(f.ring(), acc.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)).collect())
    }

    #[test]
    fn multiplication_matches_naive_oracle() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for nvars in 1..=4 {
            let names: Vec<String> = (0..nvars).map(|i| format!("x{i}")).collect();
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                let ring = PolynomialRing::new(PrimeField::new(31).unwrap(), &names, order).unwrap();
                for _ in 0..30 {
                    let f = random_poly(&ring, &mut rng, 20, 3);
                    let g = random_poly(&ring, &mut rng, 20, 3);
                    assert_eq!(f.mul(&g).unwrap(), naive_mul(&f, &g));
                }
            }
        }
    }

    proptest! {
        #[test]
        fn frobenius_is_additive(seed in any::<u64>(), pidx in 0usize..5) {
            let p = [2u64, 3, 5, 7, 31][pidx];
            let ring = PolynomialRing::grevlex(p, &["x", "y", "z"]).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let width = if p > 7 { 2 } else { 4 };
            let f = random_poly(&ring, &mut rng, width, 2);
            let g = random_poly(&ring, &mut rng, width, 2);
            let lhs = f.add(&g).unwrap().pow(p);
            let rhs = f.pow(p).add(&g.pow(p)).unwrap();
            prop_assert_eq!(&lhs, &rhs);
            prop_assert_eq!(lhs, f.add(&g).unwrap().frobenius(p).unwrap());
        }

        #[test]
        fn additive_identities(seed in any::<u64>()) {
            let ring = PolynomialRing::grevlex(5, &["x", "y"]).unwrap();
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let f = random_poly(&ring, &mut rng, 6, 3);
            let g = random_poly(&ring, &mut rng, 6, 3);
            prop_assert_eq!(f.add(&g).unwrap().sub(&g).unwrap(), f.clone());
            prop_assert_eq!(f.mul(&ring.one()).unwrap(), f);
        }
    }
}
