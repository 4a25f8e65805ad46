//! Rees algebras by elimination, fiber cones, analytic spread and
//! reduction numbers.

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::ideals::{self, QuotientRingSpec};
use crate::poly::{MonomialOrder, Polynomial, PolynomialRing};

/// `R[It]` as `S[T_1..T_s]/Q` with `T_i ↦ g_i t`.
#[derive(Clone, Debug)]
pub struct ReesPresentation {
    base: QuotientRingSpec,
    generators: Vec<Polynomial>,
    ring: PolynomialRing,
    ideal: Ideal,
}

impl ReesPresentation {
    pub fn base(&self) -> &QuotientRingSpec {
        &self.base
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// `S[T_1..T_s]`, with the `T` variables first.
    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    /// The presentation ideal Q, which contains P.
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn num_t_vars(&self) -> usize {
        self.generators.len()
    }

    /// Relations of Q involving only the T variables.
    pub fn t_only_relations(&self) -> Result<Vec<Polynomial>> {
        let s = self.num_t_vars();
        Ok(self
            .ideal
            .gb()?
            .basis()
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[s..].iter().all(|&e| e == 0)))
            .cloned()
            .collect())
    }

    /// Whether each generator of Q vanishes in `(S/P)[t]` under `T_i ↦ g_i t`.
    pub fn substitution_check(&self) -> Result<bool> {
        let amb = self.base.ambient();
        let tname = amb.fresh_name("t");
        let st = amb.prepend_vars(&[tname], MonomialOrder::Grevlex)?;
        let t = st.var(0);
        let mut images = Vec::with_capacity(self.ring.nvars());
        for g in &self.generators {
            images.push(g.map_by_names(&st)?.mul(&t)?);
        }
        images.extend((1..st.nvars()).map(|i| st.var(i)));
        let p = Ideal::new(&st, self.base.defining_ideal().generators().iter().map(|g| g.map_by_names(&st)).collect::<Result<_>>()?)?;
        for q in self.ideal.generators() {
            if !p.contains(&q.substitute(&st, &images)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn rees_presentation(r: &QuotientRingSpec, i: &Ideal) -> Result<ReesPresentation> {
    let amb = r.ambient();
    let gens = r.own_generators(i)?;
    if gens.is_empty() {
        return Err(AlgebraError::InvalidRange("the ideal is zero in R".into()));
    }
    let mut tnames: Vec<String> = Vec::with_capacity(gens.len());
    for k in 1..=gens.len() {
        let mut name = amb.fresh_name(&format!("T{k}"));
        while tnames.contains(&name) {
            name.push('_');
        }
        tnames.push(name);
    }
    let ring = amb.prepend_vars(&tnames, MonomialOrder::Grevlex)?;
    let tname = ring.fresh_name("t");
    let big = ring.prepend_vars(&[tname], MonomialOrder::Grevlex)?;
    let t = big.var(0);
    let mut rels = Vec::with_capacity(gens.len() + r.defining_ideal().generators().len());
    for (k, g) in gens.iter().enumerate() {
        rels.push(big.var(k + 1).sub(&g.map_by_names(&big)?.mul(&t)?)?);
    }
    for p in r.defining_ideal().generators() {
        rels.push(p.map_by_names(&big)?);
    }
    let kept = ideals::eliminate(&Ideal::new(&big, rels)?, &[0])?;
    // t has exponent zero in every kept generator.
    let drop_t: Vec<usize> = (0..big.nvars()).map(|v| v.saturating_sub(1)).collect();
    let q = Ideal::new(&ring, kept.generators().iter().map(|g| g.rename_into(&ring, &drop_t)).collect())?;
    Ok(ReesPresentation { base: r.clone(), generators: gens, ring, ideal: q.reduced()? })
}

/// Verdict of a bounded reduction-number search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ReductionVerdict {
    Number(u32),
    NotAReduction(u32),
}

impl std::fmt::Display for ReductionVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ReductionVerdict::Number(n) => write!(f, "{n}"),
            ReductionVerdict::NotAReduction(n) => write!(f, "NOT_A_REDUCTION({n})"),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpreadReport {
    pub spread: usize,
    /// Generators of the fiber cone's defining ideal in the T variables.
    pub fiber_relations: Vec<String>,
    pub reduction: Option<ReductionVerdict>,
}

/// Krull dimension of `R[It] ⊗ R/m`, with m the ideal of all variables.
pub fn analytic_spread(r: &QuotientRingSpec, i: &Ideal) -> Result<SpreadReport> {
    let rees = rees_presentation(r, i)?;
    let ring = rees.ring();
    let s = rees.num_t_vars();
    let mut gens = rees.ideal().generators().to_vec();
    gens.extend((s..ring.nvars()).map(|v| ring.var(v)));
    let fiber = Ideal::new(ring, gens)?.reduced()?;
    let spread = fiber.krull_dimension()?;
    let fiber_relations = fiber
        .generators()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[s..].iter().all(|&e| e == 0)))
        .map(|g| g.to_string())
        .collect();
    Ok(SpreadReport { spread, fiber_relations, reduction: None })
}

/// Least `N <= n_max` with `J I^N = I^{N+1}` in R.
pub fn reduction_number_check(r: &QuotientRingSpec, j: &Ideal, i: &Ideal, n_max: u32) -> Result<ReductionVerdict> {
    if !r.contains_ideal(i, j)? {
        return Err(AlgebraError::NotASubideal);
    }
    let mut pow = Ideal::unit(r.ambient());
    for n in 0..=n_max {
        let next = r.product(&pow, i)?;
        if r.same_ideal(&r.product(j, &pow)?, &next)? {
            return Ok(ReductionVerdict::Number(n));
        }
        pow = next;
    }
    Ok(ReductionVerdict::NotAReduction(n_max))
}

#[cfg(test)]
mod tests;
