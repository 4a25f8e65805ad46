use std::fmt;
use std::sync::Arc;

use super::field::PrimeField;
use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::error::{AlgebraError, Result};

struct RingData {
    field: PrimeField,
    names: Vec<String>,
    order: MonomialOrder,
}

/// `F_p[x_1, ..., x_n]` with a fixed term order. Cheap to clone.
#[derive(Clone)]
pub struct PolynomialRing(Arc<RingData>);

impl PolynomialRing {
    pub fn new<S: AsRef<str>>(field: PrimeField, names: &[S], order: MonomialOrder) -> Result<Self> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::InvalidRange(format!("duplicate variable name {n}")));
            }
        }
        if let MonomialOrder::Elimination(k) = order {
            if k > names.len() {
                return Err(AlgebraError::InvalidRange(format!("elimination block {k} exceeds {} variables", names.len())));
            }
        }
        Ok(PolynomialRing(Arc::new(RingData { field, names, order })))
    }

    /// Shorthand used heavily in tests: `PolynomialRing::grevlex(5, &["x", "y"])`.
    pub fn grevlex<S: AsRef<str>>(p: u64, names: &[S]) -> Result<Self> {
        Self::new(PrimeField::new(p)?, names, MonomialOrder::Grevlex)
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.0.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.0.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.0.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn var(&self, index: usize) -> Polynomial {
        Polynomial::from_terms(self, vec![(Monomial::variable(self.nvars(), index, 1), 1)])
    }

    pub fn var_named(&self, name: &str) -> Result<Polynomial> {
        let i = self
            .var_index(name)
            .ok_or_else(|| AlgebraError::InvalidRange(format!("unknown variable {name}")))?;
        Ok(self.var(i))
    }

    pub fn vars(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(self, 1)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Result<PolynomialRing> {
        PolynomialRing::new(self.0.field, &self.0.names, order)
    }

    /// Ring with `extra` variables placed in front of the existing ones.
    pub fn prepend_vars<S: AsRef<str>>(&self, extra: &[S], order: MonomialOrder) -> Result<PolynomialRing> {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.0.names.iter().cloned());
        PolynomialRing::new(self.0.field, &names, order)
    }

    /// A variable name not yet used in this ring, derived from `stem`.
    pub fn fresh_name(&self, stem: &str) -> String {
        let mut k = 0;
        loop {
            let cand = if k == 0 { stem.to_string() } else { format!("{stem}{k}") };
            if self.var_index(&cand).is_none() {
                return cand;
            }
            k += 1;
        }
    }

    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        crate::dsl::parse_polynomial(self, text)
            .map_err(|e| AlgebraError::InvalidRange(format!("cannot parse polynomial {text:?}: {e}")))
    }

    pub fn parse_all(&self, texts: &[&str]) -> Result<Vec<Polynomial>> {
        texts.iter().map(|t| self.parse(t)).collect()
    }

    pub fn same(&self, other: &PolynomialRing) -> bool {
        self == other
    }

    pub fn check_same(&self, other: &PolynomialRing) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(AlgebraError::RingMismatch)
        }
    }
}

impl PartialEq for PolynomialRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.field == other.0.field && self.0.order == other.0.order && self.0.names == other.0.names)
    }
}

impl Eq for PolynomialRing {}

impl fmt::Debug for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}] order={}", self.characteristic(), self.0.names.join(","), self.0.order.name())
    }
}

impl fmt::Display for PolynomialRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
