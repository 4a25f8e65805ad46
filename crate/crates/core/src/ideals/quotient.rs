use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::groebner::{Ideal, Length};
use crate::poly::{Polynomial, PolynomialRing};

/// `R = S/P`. Ideals of R are carried as their preimages in S, which always
/// contain P.
#[derive(Clone)]
pub struct QuotientRingSpec {
    ambient: PolynomialRing,
    defining: Ideal,
    height: usize,
}

impl fmt::Debug for QuotientRingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / {:?}", self.ambient, self.defining)
    }
}

impl QuotientRingSpec {
    pub fn new(defining: Ideal) -> Result<Self> {
        let ambient = defining.ring().clone();
        let defining = defining.reduced()?;
        let height = ambient.nvars() - defining.krull_dimension()?;
        Ok(QuotientRingSpec { ambient, defining, height })
    }

    /// S itself, as the quotient by the zero ideal.
    pub fn polynomial(ring: &PolynomialRing) -> Self {
        QuotientRingSpec { ambient: ring.clone(), defining: Ideal::zero(ring), height: 0 }
    }

    pub fn ambient(&self) -> &PolynomialRing {
        &self.ambient
    }

    pub fn defining_ideal(&self) -> &Ideal {
        &self.defining
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// `d = dim R`.
    pub fn dim(&self) -> usize {
        self.ambient.nvars() - self.height
    }

    pub fn is_polynomial_ring(&self) -> bool {
        self.defining.is_zero()
    }

    /// Preimage in S of the R-ideal generated by the images of `gens`.
    pub fn ideal(&self, gens: Vec<Polynomial>) -> Result<Ideal> {
        let mut all = self.strip(gens)?;
        all.extend(self.defining.generators().iter().cloned());
        Ideal::new(&self.ambient, all)
    }

    pub fn parse_ideal(&self, gens: &[&str]) -> Result<Ideal> {
        self.ideal(self.ambient.parse_all(gens)?)
    }

    /// Preimage of the image of an S-ideal.
    pub fn lift(&self, i: &Ideal) -> Result<Ideal> {
        self.ideal(i.generators().to_vec())
    }

    /// Generators of `i` that are nonzero in R.
    pub fn own_generators(&self, i: &Ideal) -> Result<Vec<Polynomial>> {
        self.strip(i.generators().to_vec())
    }

    fn strip(&self, gens: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            self.ambient.check_same(g.ring())?;
            if !self.defining.contains(&g)? {
                out.push(g);
            }
        }
        Ok(out)
    }

    /// The homogeneous maximal ideal of R.
    pub fn maximal(&self) -> Result<Ideal> {
        self.ideal(self.ambient.vars())
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial> {
        if self.defining.is_zero() {
            return Ok(f.clone());
        }
        self.defining.normal_form(f)
    }

    pub fn is_zero(&self, f: &Polynomial) -> Result<bool> {
        self.defining.contains(f)
    }

    /// `λ(R/I)`.
    pub fn colength(&self, i: &Ideal) -> Result<Length> {
        self.lift(i)?.colength()
    }

    pub fn krull_dimension(&self, i: &Ideal) -> Result<usize> {
        self.lift(i)?.krull_dimension()
    }

    pub fn contains(&self, i: &Ideal, f: &Polynomial) -> Result<bool> {
        self.lift(i)?.contains(f)
    }

    pub fn same_ideal(&self, i: &Ideal, j: &Ideal) -> Result<bool> {
        self.lift(i)?.same_ideal(&self.lift(j)?)
    }

    pub fn contains_ideal(&self, big: &Ideal, small: &Ideal) -> Result<bool> {
        let big = self.lift(big)?;
        for g in self.own_generators(small)? {
            if !big.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn bracket_power(&self, i: &Ideal, q: u64) -> Result<Ideal> {
        let own = Ideal::new(&self.ambient, self.own_generators(i)?)?;
        self.lift(&super::bracket_power(&own, q)?)
    }

    pub fn power(&self, i: &Ideal, n: u32) -> Result<Ideal> {
        let own = Ideal::new(&self.ambient, self.own_generators(i)?)?;
        self.lift(&super::power(&own, n)?)
    }

    pub fn product(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        let a = Ideal::new(&self.ambient, self.own_generators(i)?)?;
        let b = Ideal::new(&self.ambient, self.own_generators(j)?)?;
        self.lift(&super::product(&a, &b)?)
    }

    pub fn colon(&self, i: &Ideal, f: &Polynomial) -> Result<Ideal> {
        if self.is_zero(f)? {
            return Err(AlgebraError::DivisionByZero);
        }
        super::colon(&self.lift(i)?, f)
    }

    pub fn colon_ideal(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        let own = Ideal::new(&self.ambient, self.own_generators(j)?)?;
        if own.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        super::colon_ideal(&self.lift(i)?, &own)
    }

    pub fn intersect(&self, i: &Ideal, j: &Ideal) -> Result<Ideal> {
        super::intersect(&self.lift(i)?, &self.lift(j)?)
    }

    pub fn saturate_ideal(&self, i: &Ideal, j: &Ideal) -> Result<(Ideal, u32)> {
        let own = Ideal::new(&self.ambient, self.own_generators(j)?)?;
        super::saturate_ideal(&self.lift(i)?, &own)
    }

    pub fn symbolic_power(&self, i: &Ideal, n: u32, sat: &Ideal) -> Result<Ideal> {
        Ok(self.saturate_ideal(&self.power(i, n)?, sat)?.0)
    }
}
