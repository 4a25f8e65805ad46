use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{AlgebraError, Result};

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// A power product `x_1^{a_1} ... x_n^{a_n}`; the total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Exps,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial { degree: exps.iter().sum(), exps: SmallVec::from_slice(exps) }
    }

    pub fn variable(nvars: usize, index: usize, power: u32) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m.degree = power;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
            degree: self.degree + other.degree,
        }
    }

    pub fn pow(&self, e: u32) -> Result<Monomial> {
        let mut exps = Exps::with_capacity(self.exps.len());
        for &a in &self.exps {
            exps.push(a.checked_mul(e).ok_or(AlgebraError::ExponentOverflow)?);
        }
        let degree = self.degree.checked_mul(e).ok_or(AlgebraError::ExponentOverflow)?;
        Ok(Monomial { exps, degree })
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect();
        Monomial { degree: exps.iter().sum(), exps }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bit `i` is set when variable `i mod 64` occurs.
    #[inline]
    pub fn support_mask(&self) -> u64 {
        let mut mask = 0u64;
        for (i, &a) in self.exps.iter().enumerate() {
            if a > 0 {
                mask |= 1 << (i % 64);
            }
        }
        mask
    }

    pub(crate) fn with_exponents(exps: Exps) -> Monomial {
        Monomial { degree: exps.iter().sum(), exps }
    }

    /// Degree restricted to the variables in `range`.
    fn partial_degree(&self, range: std::ops::Range<usize>) -> u32 {
        self.exps[range].iter().sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Term orders on monomials.
///
/// `Elimination(k)` compares the first `k` variables by grevlex and breaks
/// ties by grevlex on the remaining ones, so any monomial involving one of
/// the first `k` variables beats every monomial free of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Lex,
    Elimination(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
    let da = a.partial_degree(range.clone());
    let db = b.partial_degree(range.clone());
    if da != db {
        return da.cmp(&db);
    }
    for i in range.rev() {
        match a.exps[i].cmp(&b.exps[i]) {
            Ordering::Equal => continue,
            // smaller exponent in the last differing variable is larger
            other => return other.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => {
                if a.degree != b.degree {
                    return a.degree.cmp(&b.degree);
                }
                for i in (0..a.exps.len()).rev() {
                    match a.exps[i].cmp(&b.exps[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Elimination(k) => {
                let n = a.exps.len();
                let k = k.min(n);
                grevlex_range(a, b, 0..k).then_with(|| grevlex_range(a, b, k..n))
            }
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Elimination(k) => format!("elim({k})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..5, 4).prop_map(|v| Monomial::from_exponents(&v))
    }

    fn orders() -> Vec<MonomialOrder> {
        vec![
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Elimination(1),
            MonomialOrder::Elimination(2),
        ]
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        let m = |v: &[u32]| Monomial::from_exponents(v);
        // x^2 > xy > y^2 > xz > yz > z^2
        let chain = [m(&[2, 0, 0]), m(&[1, 1, 0]), m(&[0, 2, 0]), m(&[1, 0, 1]), m(&[0, 1, 1]), m(&[0, 0, 2])];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn elimination_puts_block_first() {
        let o = MonomialOrder::Elimination(1);
        let t = Monomial::from_exponents(&[1, 0, 0]);
        let big = Monomial::from_exponents(&[0, 7, 7]);
        assert_eq!(o.cmp(&t, &big), Ordering::Greater);
    }

    proptest! {
        #[test]
        fn order_laws(a in mono(), b in mono(), c in mono()) {
            for o in orders() {
                // totality and antisymmetry
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
                prop_assert_eq!(o.cmp(&a, &b) == Ordering::Equal, a == b);
                // multiplicativity
                prop_assert_eq!(o.cmp(&a, &b), o.cmp(&a.mul(&c), &b.mul(&c)));
                // 1 is the minimum
                prop_assert_ne!(o.cmp(&Monomial::one(4), &a), Ordering::Greater);
                // transitivity
                if o.cmp(&a, &b) != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
                    prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
                }
            }
        }
    }
}
