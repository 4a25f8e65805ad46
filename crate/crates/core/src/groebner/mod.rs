//! Gröbner bases, ideal membership, colength and Krull dimension.

pub(crate) mod engine;
pub(crate) mod staircase;

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial, PolynomialRing};
use engine::{Engine, Vector};

/// Length of a quotient; infinite length is an ordinary answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(n) => Some(n),
            Length::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(n) => write!(f, "{n}"),
            Length::Infinite => f.write_str("INFINITE"),
        }
    }
}

/// Reduced Gröbner basis of an ideal under the ring's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: PolynomialRing,
    generators: Vec<Polynomial>,
    basis: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(ring: &PolynomialRing, generators: &[Polynomial]) -> Result<Self> {
        for g in generators {
            ring.check_same(g.ring())?;
        }
        let engine = Engine::for_ring(ring, true);
        let vecs = generators.iter().map(|g| Vector::from_polynomial(g, 0)).collect();
        let basis = engine.groebner(vecs)?.iter().map(|v| v.to_polynomial(ring)).collect();
        Ok(GroebnerBasis { ring: ring.clone(), generators: generators.to_vec(), basis })
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| g.leading_monomial().expect("nonzero").clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_unit()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(f.ring())?;
        let engine = Engine::for_ring(&self.ring, true);
        let basis: Vec<Vector> = self.basis.iter().map(|g| Vector::from_polynomial(g, 0)).collect();
        Ok(engine.normal_form(Vector::from_polynomial(f, 0), &basis).to_polynomial(&self.ring))
    }

    pub fn reduces_to_zero(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn colength(&self) -> Length {
        match staircase::count_standard(&self.leading_monomials(), self.ring.nvars()) {
            Some(n) => Length::Finite(n),
            None => Length::Infinite,
        }
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        staircase::max_independent_set(&self.leading_monomials(), self.ring.nvars())
            .map(|s| s.len())
            .ok_or(AlgebraError::EmptyVariety)
    }

    /// Standard-monomial counts by degree; the Hilbert function of `S/I`
    /// when `I` is homogeneous.
    pub fn hilbert_function(&self, max_degree: u32) -> Vec<u64> {
        staircase::hilbert_function(&self.leading_monomials(), self.ring.nvars(), max_degree)
    }
}

/// Ideal of a polynomial ring, given by generators, with a lazily computed
/// Gröbner basis.
pub struct Ideal {
    ring: PolynomialRing,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(g) = self.gb.get() {
            let _ = gb.set(g.clone());
        }
        Ideal { ring: self.ring.clone(), generators: self.generators.clone(), gb }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Ideal {
    /// Zero generators are dropped; the ring of every generator must match.
    pub fn new(ring: &PolynomialRing, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            ring.check_same(g.ring())?;
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), generators, gb: OnceLock::new() })
    }

    pub fn parse(ring: &PolynomialRing, gens: &[&str]) -> Result<Self> {
        Self::new(ring, ring.parse_all(gens)?)
    }

    pub fn zero(ring: &PolynomialRing) -> Self {
        Ideal { ring: ring.clone(), generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &PolynomialRing) -> Self {
        Ideal { ring: ring.clone(), generators: vec![ring.one()], gb: OnceLock::new() }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolynomialRing) -> Self {
        Ideal { ring: ring.clone(), generators: ring.vars(), gb: OnceLock::new() }
    }

    pub(crate) fn from_basis(basis: GroebnerBasis) -> Self {
        let gb = OnceLock::new();
        let ring = basis.ring.clone();
        let generators = basis.basis.clone();
        let _ = gb.set(basis);
        Ideal { ring, generators, gb }
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Gröbner basis, computed on first use; concurrent first calls may both
    /// compute it, and the result is the same either way.
    pub fn gb(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let computed = GroebnerBasis::compute(&self.ring, &self.generators)?;
        let _ = self.gb.set(computed);
        Ok(self.gb.get().expect("just set"))
    }

    /// Ideal generated by the reduced Gröbner basis.
    pub fn reduced(&self) -> Result<Ideal> {
        Ok(Ideal::from_basis(self.gb()?.clone()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        self.ring.check_same(f.ring())?;
        if f.is_zero() {
            return Ok(true);
        }
        self.gb()?.reduces_to_zero(f)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.gb()?.normal_form(f)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, via reduced Gröbner bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gb()?.basis() == other.gb()?.basis())
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(self.gb()?.is_unit_ideal())
    }

    pub fn colength(&self) -> Result<Length> {
        Ok(self.gb()?.colength())
    }

    pub fn krull_dimension(&self) -> Result<usize> {
        self.gb()?.krull_dimension()
    }

    /// Height as `nvars - dim`.
    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dimension()?)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous())
    }
}

pub fn groebner_basis(ideal: &Ideal) -> Result<GroebnerBasis> {
    ideal.gb().cloned()
}

pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(f)
}

pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    ideal.contains(f)
}

pub fn colength(ideal: &Ideal) -> Result<Length> {
    ideal.colength()
}

pub fn krull_dimension(ideal: &Ideal) -> Result<usize> {
    ideal.krull_dimension()
}
