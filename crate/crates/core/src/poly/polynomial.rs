use std::cmp::Ordering;
use std::fmt;

use super::field::Coeff;
use super::monomial::Monomial;
use super::ring::PolynomialRing;
use crate::error::{AlgebraError, Result};

/// Sparse polynomial in canonical form: terms strictly descending in the
/// ring's order, no zero coefficients. Equality is structural.
#[derive(Clone)]
pub struct Polynomial {
    ring: PolynomialRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &PolynomialRing) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &PolynomialRing, c: Coeff) -> Self {
        let c = c % ring.characteristic();
        let terms = if c == 0 { Vec::new() } else { vec![(Monomial::one(ring.nvars()), c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn monomial(ring: &PolynomialRing, m: Monomial, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a canonical polynomial from terms in any order, combining duplicates.
    pub fn from_terms(ring: &PolynomialRing, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_unstable_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            let c = c % field.characteristic();
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Trusts the caller that `terms` is already canonical.
    pub(crate) fn from_sorted(ring: &PolynomialRing, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        Polynomial { ring: ring.clone(), terms }
    }

    #[inline]
    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1 == 1
    }

    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<Coeff> {
        self.terms.first().map(|t| t.1)
    }

    /// Total degree of the polynomial; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Whether the variable with the given index occurs.
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.0.exponents()[var] > 0)
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        self.ring.check_same(&other.ring)
    }

    /// Merge of `self + c * other`.
    fn axpy(&self, c: Coeff, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), field.mul(c, b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a[i].1, field.mul(c, b[j].1));
                    if s != 0 {
                        out.push((a[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|(m, v)| (m.clone(), field.mul(c, *v))));
        out.retain(|t| t.1 != 0);
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.axpy(1, other))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let minus_one = self.ring.field().neg(1);
        Ok(self.axpy(minus_one, other))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.field().neg(1))
    }

    pub fn scale(&self, c: Coeff) -> Polynomial {
        let field = self.ring.field();
        let c = c % field.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), field.mul(c, *v))).collect(),
        }
    }

    /// `c * m * self`; the order is multiplicative so no resorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: Coeff) -> Polynomial {
        let field = self.ring.field();
        if c.is_multiple_of(field.characteristic()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(n, v)| (n.mul(m), field.mul(c, *v))).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            return big.mul_term(&small.terms[0].0, small.terms[0].1);
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(small.len() * big.len());
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                terms.push((m.mul(n), field.mul(*c, *d)));
            }
        }
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Polynomial {
        let mut acc = Polynomial::constant(&self.ring, 1);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// `self^q` for `q` a power of the characteristic, computed termwise.
    pub fn frobenius(&self, q: u64) -> Result<Polynomial> {
        let p = self.ring.characteristic();
        if self.ring.field().frobenius_exponent(q).is_none() {
            return Err(AlgebraError::InvalidFrobeniusPower { q, p });
        }
        let q32 = u32::try_from(q).map_err(|_| AlgebraError::ExponentOverflow)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            // c^q = c in F_p
            terms.push((m.pow(q32)?, *c));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Scales so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field().inv(c).expect("nonzero leading coefficient")),
        }
    }

    /// Substitutes polynomials (all in `target`) for the variables of this ring.
    pub fn substitute(&self, target: &PolynomialRing, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.ring.nvars() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.ring.nvars()
            )));
        }
        for img in images {
            target.check_same(img.ring())?;
        }
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, *c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul_unchecked(&images[i].pow(e as u64));
                }
            }
            acc = acc.axpy(1, &t);
        }
        Ok(acc)
    }

    /// Re-embeds into `target`, sending variable `i` to variable `map[i]`.
    /// Much cheaper than `substitute` since no products are formed.
    pub fn rename_into(&self, target: &PolynomialRing, map: &[usize]) -> Polynomial {
        debug_assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = smallvec::SmallVec::from_elem(0u32, n);
                for (i, &e) in m.exponents().iter().enumerate() {
                    exps[map[i]] += e;
                }
                (Monomial::with_exponents(exps), *c)
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Embeds into a ring with the same variable names, possibly reordered or
    /// extended; variables are matched by name.
    pub fn map_by_names(&self, target: &PolynomialRing) -> Result<Polynomial> {
        let mut map = Vec::with_capacity(self.ring.nvars());
        for name in self.ring.names() {
            map.push(target.var_index(name).ok_or_else(|| {
                AlgebraError::InvalidRange(format!("variable {name} missing from target ring"))
            })?);
        }
        if target.characteristic() != self.ring.characteristic() {
            return Err(AlgebraError::RingMismatch);
        }
        Ok(self.rename_into(target, &map))
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Option<Polynomial>> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let field = self.ring.field();
        let lm = divisor.terms[0].0.clone();
        let lc_inv = field.inv(divisor.terms[0].1)?;
        let mut rest = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rest.terms.first().cloned() {
            if !lm.divides(&m) {
                return Ok(None);
            }
            let qm = lm.quotient_of(&m);
            let qc = field.mul(c, lc_inv);
            rest = rest.axpy(field.neg(qc), &divisor.mul_term(&qm, 1));
            quotient.push((qm, qc));
        }
        Ok(Some(Polynomial::from_terms(&self.ring, quotient)))
    }

    pub fn display_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let field = self.ring.field();
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let s = field.signed(*c);
            let (neg, abs) = (s < 0, s.unsigned_abs());
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if abs != 1 || m.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(self.ring.names()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Arithmetic selector for the `poly_arith` entry point.
#[derive(Clone, Debug)]
pub enum PolyOperand {
    Poly(Polynomial),
    Scalar(Coeff),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    Scale,
}

pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &PolyOperand) -> Result<Polynomial> {
    match (op, g) {
        (PolyOp::Add, PolyOperand::Poly(g)) => f.add(g),
        (PolyOp::Mul, PolyOperand::Poly(g)) => f.mul(g),
        (PolyOp::Scale, PolyOperand::Scalar(c)) | (PolyOp::Mul, PolyOperand::Scalar(c)) => Ok(f.scale(*c)),
        (PolyOp::Add, PolyOperand::Scalar(c)) => f.add(&Polynomial::constant(f.ring(), *c)),
        (PolyOp::Scale, PolyOperand::Poly(g)) => match g.constant_value() {
            Some(c) => Ok(f.scale(c)),
            None => Err(AlgebraError::InvalidRange("scale expects a constant".into())),
        },
    }
}
