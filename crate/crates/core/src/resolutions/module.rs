use crate::error::{AlgebraError, Result};
use crate::groebner::engine::{Engine, VTerm, Vector};
use crate::groebner::{staircase, Ideal, Length};
use crate::poly::{Monomial, Polynomial, PolynomialRing};

use super::FreeMap;

/// Reduced Gröbner basis of a submodule of `S^rank` (position over term,
/// lower component first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleBasis {
    ring: PolynomialRing,
    rank: usize,
    basis: Vec<Vector>,
}

impl SubmoduleBasis {
    pub fn compute(ring: &PolynomialRing, rank: usize, gens: &[Vec<Polynomial>]) -> Result<Self> {
        let engine = Engine::for_ring(ring, rank == 1);
        let vecs: Vec<Vector> = gens
            .iter()
            .map(|g| {
                if g.len() != rank {
                    return Err(AlgebraError::DimensionMismatch(format!("vector of length {} in rank {rank}", g.len())));
                }
                Ok(Vector::from_columns(g))
            })
            .collect::<Result<_>>()?;
        let basis = engine.groebner(vecs)?;
        Ok(SubmoduleBasis { ring: ring.clone(), rank, basis })
    }

    /// Image of a map, as a submodule of its target.
    pub fn of_image(map: &FreeMap) -> Result<Self> {
        Self::compute(map.ring(), map.nrows(), map.columns())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn generators(&self) -> Vec<Vec<Polynomial>> {
        self.basis.iter().map(|v| v.to_columns(&self.ring, self.rank)).collect()
    }

    pub fn normal_form(&self, v: &[Polynomial]) -> Vec<Polynomial> {
        let engine = Engine::for_ring(&self.ring, self.rank == 1);
        engine.normal_form(Vector::from_columns(v), &self.basis).to_columns(&self.ring, self.rank)
    }

    pub fn contains(&self, v: &[Polynomial]) -> bool {
        if v.iter().all(|p| p.is_zero()) {
            return true;
        }
        let engine = Engine::for_ring(&self.ring, self.rank == 1);
        engine.normal_form(Vector::from_columns(v), &self.basis).is_zero()
    }

    pub fn contains_all(&self, gens: &[Vec<Polynomial>]) -> bool {
        gens.iter().all(|g| self.contains(g))
    }

    /// Leading monomials grouped by component.
    pub fn leading_by_component(&self) -> Vec<Vec<Monomial>> {
        let mut out = vec![Vec::new(); self.rank];
        for v in &self.basis {
            let VTerm { comp, mono } = &v.terms[0].0;
            out[*comp as usize].push(mono.clone());
        }
        out
    }

    /// `λ(S^rank / N)`.
    pub fn quotient_length(&self) -> Length {
        let n = self.ring.nvars();
        let mut total = 0u64;
        for lts in self.leading_by_component() {
            match staircase::count_standard(&lts, n) {
                Some(c) => total += c,
                None => return Length::Infinite,
            }
        }
        Length::Finite(total)
    }

    /// Whether the submodule is all of `S^rank`.
    pub fn is_everything(&self) -> bool {
        self.leading_by_component().iter().all(|l| l.iter().any(|m| m.is_one()))
    }

    /// Hilbert function of `S^rank / N` with generator `c` in degree
    /// `degrees[c]`, on degrees `start..start + len`.
    pub fn quotient_hilbert(&self, degrees: &[i64], start: i64, len: usize) -> Vec<u64> {
        let n = self.ring.nvars();
        let mut out = vec![0u64; len];
        for (lts, &d) in self.leading_by_component().iter().zip(degrees) {
            let top = start + len as i64 - 1 - d;
            if top < 0 {
                continue;
            }
            let hf = staircase::hilbert_function(lts, n, top as u32);
            for (k, v) in hf.iter().enumerate() {
                let deg = d + k as i64;
                if deg >= start {
                    out[(deg - start) as usize] += v;
                }
            }
        }
        out
    }
}

/// Columns generating `ker(a)`.
pub fn syzygies(a: &FreeMap) -> Result<FreeMap> {
    let ring = a.ring();
    let (r, n) = (a.nrows(), a.ncols());
    let engine = Engine::for_ring(ring, false);
    let mut gens = Vec::with_capacity(n);
    for (j, col) in a.columns().iter().enumerate() {
        let mut v = Vector::from_columns(col);
        v.terms.push((VTerm { comp: (r + j) as u32, mono: Monomial::one(ring.nvars()) }, 1));
        gens.push(v);
    }
    let basis = engine.groebner(gens)?;
    let mut cols = Vec::new();
    for v in basis {
        if v.terms[0].0.comp as usize >= r {
            let full = v.to_columns(ring, r + n);
            cols.push(full[r..].to_vec());
        }
    }
    let syz = FreeMap::with_row_degrees(ring, a.col_degrees().to_vec(), cols)?;
    minimal_columns(&syz)
}

/// Drops columns lying in the span of the others, scanning in order of
/// increasing degree. Minimal for homogeneous maps.
pub fn minimal_columns(map: &FreeMap) -> Result<FreeMap> {
    let map = map.drop_zero_columns();
    let mut order: Vec<usize> = (0..map.ncols()).collect();
    order.sort_by_key(|&j| (map.col_degrees()[j], map.column(j).iter().map(|p| p.len()).sum::<usize>()));
    let mut keep: Vec<usize> = Vec::new();
    let mut basis: Option<SubmoduleBasis> = None;
    for j in order {
        if let Some(b) = &basis {
            if b.contains(map.column(j)) {
                continue;
            }
        }
        keep.push(j);
        let gens: Vec<Vec<Polynomial>> = keep.iter().map(|&k| map.column(k).to_vec()).collect();
        basis = Some(SubmoduleBasis::compute(map.ring(), map.nrows(), &gens)?);
    }
    // a second pass catches generators made redundant by later ones
    let mut i = 0;
    while i < keep.len() && keep.len() > 1 {
        let others: Vec<Vec<Polynomial>> =
            keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, &c)| map.column(c).to_vec()).collect();
        let b = SubmoduleBasis::compute(map.ring(), map.nrows(), &others)?;
        if b.contains(map.column(keep[i])) {
            keep.remove(i);
        } else {
            i += 1;
        }
    }
    keep.sort_unstable();
    Ok(map.select_columns(&keep))
}

/// Columns generating `{z : phi(z) ∈ im(n)}`.
pub fn preimage(phi: &FreeMap, n: &FreeMap) -> Result<FreeMap> {
    let k = phi.ncols();
    if n.ncols() == 0 {
        return syzygies(phi);
    }
    let syz = syzygies(&phi.hconcat(n)?)?;
    let top = syz.top_rows(k);
    let mut t = FreeMap::with_row_degrees(phi.ring(), phi.col_degrees().to_vec(), top.columns().to_vec())?;
    t = t.drop_zero_columns();
    minimal_columns(&t)
}

/// `coker(presentation)`; generator `c` sits in degree `row_degrees[c]`.
#[derive(Clone, Debug)]
pub struct PresentedModule {
    presentation: FreeMap,
}

impl PresentedModule {
    pub fn new(presentation: FreeMap) -> Self {
        PresentedModule { presentation }
    }

    /// `S/I` as a cyclic module.
    pub fn quotient(i: &Ideal) -> Result<Self> {
        let ring = i.ring();
        let cols = i.generators().iter().map(|g| vec![g.clone()]).collect();
        Ok(PresentedModule::new(FreeMap::from_columns(ring, 1, cols)?))
    }

    /// The free module `S^n`.
    pub fn free(ring: &PolynomialRing, n: usize) -> Self {
        PresentedModule::new(FreeMap::zero(ring, n, 0))
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.presentation.ring()
    }

    pub fn presentation(&self) -> &FreeMap {
        &self.presentation
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.nrows()
    }

    pub fn relations(&self) -> Result<SubmoduleBasis> {
        SubmoduleBasis::of_image(&self.presentation)
    }

    /// Whether `v` (in the free cover) is zero in the module.
    pub fn is_zero_element(&self, v: &[Polynomial]) -> Result<bool> {
        Ok(self.relations()?.contains(v))
    }

    pub fn is_zero(&self) -> Result<bool> {
        Ok(self.relations()?.is_everything())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.presentation.is_homogeneous()
    }

    /// Hilbert function on degrees `start..start+len`.
    pub fn hilbert_function(&self, start: i64, len: usize) -> Result<Vec<u64>> {
        if !self.is_homogeneous() {
            return Err(AlgebraError::NotHomogeneous("Hilbert function of a non-graded module".into()));
        }
        Ok(self.relations()?.quotient_hilbert(self.presentation.row_degrees(), start, len))
    }

    /// Hilbert function starting at the first degree where it is nonzero,
    /// searching degrees `lo..lo+window`; returns `len` values.
    pub fn hilbert_from_initial_degree(&self, lo: i64, window: usize, len: usize) -> Result<Vec<u64>> {
        let hf = self.hilbert_function(lo, window + len)?;
        let first = hf.iter().take(window).position(|&v| v != 0);
        Ok(match first {
            Some(k) => hf[k..k + len].to_vec(),
            None => vec![0; len],
        })
    }

    /// The same module with unit entries of the presentation cancelled.
    pub fn pruned(&self) -> Result<PresentedModule> {
        Ok(prune_presentation(&self.presentation, None)?.0)
    }
}

/// Cancels unit entries of a presentation. When a lift table (one column
/// per generator) is supplied, the columns of cancelled generators are
/// dropped from it so it still matches the generators.
pub(crate) fn prune_presentation(a: &FreeMap, lift: Option<&FreeMap>) -> Result<(PresentedModule, Option<FreeMap>)> {
    let mut a = a.drop_zero_columns();
    let mut lift = lift.cloned();
    while let Some((i, j)) = a.find_unit() {
        a = a.cancel_unit(i, j)?.0.drop_zero_columns();
        if let Some(l) = lift.as_mut() {
            let keep: Vec<usize> = (0..l.ncols()).filter(|&c| c != i).collect();
            *l = l.select_columns(&keep);
        }
    }
    Ok((PresentedModule::new(a), lift))
}

/// `Z/B` for submodules `B ⊆ Z ⊆ S^n` given by generating columns.
#[derive(Clone, Debug)]
pub struct Subquotient {
    /// Presentation on the generators of `Z` that survive pruning.
    pub module: PresentedModule,
    /// Column `c` is the element of `S^n` representing generator `c`.
    pub lift: FreeMap,
    pub cycles: FreeMap,
    pub boundaries: FreeMap,
}

impl Subquotient {
    pub fn new(cycles: &FreeMap, boundaries: &FreeMap) -> Result<Self> {
        let ring = cycles.ring();
        let z = cycles.ncols();
        let rel = if boundaries.ncols() == 0 && z > 0 {
            syzygies(cycles)?
        } else if z == 0 {
            FreeMap::zero(ring, 0, 0)
        } else {
            syzygies(&cycles.hconcat(boundaries)?)?.top_rows(z)
        };
        let mut rel = FreeMap::with_row_degrees(ring, cycles.col_degrees().to_vec(), rel.columns().to_vec())?;
        rel = rel.drop_zero_columns();
        let (module, lift) = prune_presentation(&rel, Some(cycles))?;
        Ok(Subquotient { module, lift: lift.expect("lift supplied"), cycles: cycles.clone(), boundaries: boundaries.clone() })
    }

    pub fn length(&self) -> Result<Length> {
        module_length(&self.module)
    }
}

/// `λ(M)`, or INFINITE.
pub fn module_length(m: &PresentedModule) -> Result<Length> {
    Ok(m.relations()?.quotient_length())
}

/// Whether `f` kills every generator of `M`.
pub fn annihilates(f: &Polynomial, m: &PresentedModule) -> Result<bool> {
    let rel = m.relations()?;
    let ring = m.ring();
    for c in 0..m.num_generators() {
        let mut v = vec![ring.zero(); m.num_generators()];
        v[c] = f.clone();
        if !rel.contains(&v) {
            return Ok(false);
        }
    }
    Ok(true)
}
