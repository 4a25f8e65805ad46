//! Free maps, presented modules, syzygies, free resolutions and Ext over
//! the ambient polynomial ring.

mod freemap;
mod module;

pub use freemap::FreeMap;
pub use module::{
    annihilates, minimal_columns, module_length, preimage, syzygies, PresentedModule, SubmoduleBasis, Subquotient,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::ideals::{self, QuotientRingSpec};
use crate::poly::{Polynomial, PolynomialRing};

/// `F_0 <- F_1 <- F_2 <- ...`; `maps[k]` is `F_{k+1} -> F_k`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    maps: Vec<FreeMap>,
    base_rank: usize,
}

impl ChainComplex {
    pub fn new(base_rank: usize, maps: Vec<FreeMap>) -> Result<Self> {
        let mut prev = base_rank;
        for (k, m) in maps.iter().enumerate() {
            if m.nrows() != prev {
                return Err(AlgebraError::DimensionMismatch(format!("map {k} has {} rows, expected {prev}", m.nrows())));
            }
            prev = m.ncols();
        }
        Ok(ChainComplex { maps, base_rank })
    }

    pub fn maps(&self) -> &[FreeMap] {
        &self.maps
    }

    pub fn rank(&self, k: usize) -> usize {
        if k == 0 {
            self.base_rank
        } else {
            self.maps.get(k - 1).map_or(0, |m| m.ncols())
        }
    }

    /// Ranks of `F_0, F_1, ...` up to the last nonzero one.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..=self.maps.len()).map(|k| self.rank(k)).collect();
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }

    /// Index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.betti_numbers().len() - 1
    }

    /// Consecutive composites vanish.
    pub fn is_complex(&self) -> Result<bool> {
        for w in self.maps.windows(2) {
            if !w[0].compose(&w[1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Exactness at every `F_k`, `k >= 1`: the next map's columns generate
    /// the kernel.
    pub fn is_exact_in_positive_degrees(&self) -> Result<bool> {
        for k in 0..self.maps.len() {
            let kernel = syzygies(&self.maps[k])?;
            let image = match self.maps.get(k + 1) {
                Some(m) => SubmoduleBasis::of_image(m)?,
                None => SubmoduleBasis::compute(self.maps[k].ring(), self.maps[k].ncols(), &[])?,
            };
            if !image.contains_all(kernel.columns()) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Cancels unit entries until none remain.
    fn prune(&mut self) -> Result<()> {
        while let Some((k, (i, j))) = self.maps.iter().enumerate().find_map(|(k, m)| m.find_unit().map(|u| (k, u))) {
            let (reduced, _) = self.maps[k].cancel_unit(i, j)?;
            self.maps[k] = reduced;
            if k + 1 < self.maps.len() {
                let next = &self.maps[k + 1];
                let rows: Vec<Vec<Polynomial>> = next
                    .columns()
                    .iter()
                    .map(|c| c.iter().enumerate().filter(|(r, _)| *r != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let mut rd = next.row_degrees().to_vec();
                rd.remove(j);
                self.maps[k + 1] = FreeMap::with_row_degrees(next.ring(), rd, rows)?;
            }
            if k == 0 {
                self.base_rank -= 1;
            } else {
                let prev = &self.maps[k - 1];
                let keep: Vec<usize> = (0..prev.ncols()).filter(|&c| c != i).collect();
                self.maps[k - 1] = prev.select_columns(&keep);
            }
        }
        while self.maps.last().is_some_and(|m| m.ncols() == 0) {
            self.maps.pop();
        }
        Ok(())
    }
}

/// Free resolution of `M`, pruned of unit entries.
pub fn free_resolution(m: &PresentedModule, max_len: usize) -> Result<ChainComplex> {
    let first = minimal_columns(m.presentation())?;
    let base = first.nrows();
    let mut maps = vec![first];
    loop {
        let last = maps.last().unwrap();
        if last.ncols() == 0 {
            maps.pop();
            break;
        }
        let next = syzygies(last)?;
        if next.ncols() == 0 {
            break;
        }
        if maps.len() >= max_len {
            return Err(AlgebraError::ResourceLimit(format!("resolution longer than {max_len}")));
        }
        maps.push(next);
    }
    let mut c = ChainComplex::new(base, maps)?;
    c.prune()?;
    Ok(c)
}

/// `Ext^i_S(M, S)` as a presented module.
pub fn ext_module(m: &PresentedModule, i: usize) -> Result<PresentedModule> {
    Ok(ext_subquotient(m, i)?.module)
}

/// `Ext^i_S(M, S)` as `ker(d_{i+1}^T) / im(d_i^T)` inside the dual of `F_i`,
/// keeping the lift of each generator.
pub fn ext_subquotient(m: &PresentedModule, i: usize) -> Result<Subquotient> {
    let ring = m.ring();
    let res = free_resolution(m, ring.nvars() + 2)?;
    ext_from_resolution(ring, &res, i)
}

pub(crate) fn ext_from_resolution(ring: &PolynomialRing, res: &ChainComplex, i: usize) -> Result<Subquotient> {
    let rank = res.rank(i);
    if rank == 0 {
        let z = FreeMap::zero(ring, 0, 0);
        return Subquotient::new(&z, &z);
    }
    let degrees: Vec<i64> = if i == 0 {
        res.maps().first().map_or(vec![0; rank], |d| d.row_degrees().iter().map(|x| -x).collect())
    } else {
        res.maps()[i - 1].col_degrees().iter().map(|x| -x).collect()
    };
    let cycles = match res.maps().get(i) {
        Some(d) => syzygies(&d.dual())?,
        None => {
            let mut id = FreeMap::identity(ring, rank);
            id.set_row_degrees(degrees.clone());
            id
        }
    };
    let boundaries = if i == 0 {
        FreeMap::with_row_degrees(ring, degrees, Vec::new())?
    } else {
        res.maps()[i - 1].dual()
    };
    Subquotient::new(&cycles, &boundaries)
}

/// Depth by Auslander–Buchsbaum: number of variables minus projective dimension.
pub fn depth_via_ab(m: &PresentedModule) -> Result<usize> {
    if m.is_zero()? {
        return Err(AlgebraError::ZeroModule);
    }
    let n = m.ring().nvars();
    let res = free_resolution(m, n + 2)?;
    Ok(n - res.length())
}

/// Homogeneous combinations of the generators of `i` forming a regular
/// sequence of length `height(i)`; a sequence in a polynomial ring is
/// regular exactly when each prefix has height equal to its length.
pub fn regular_sequence_in(i: &Ideal, seed: u64) -> Result<Vec<Polynomial>> {
    let ring = i.ring();
    let c = i.height()?;
    let gens: Vec<&Polynomial> = i.generators().iter().filter(|g| !g.is_zero()).collect();
    let top = gens.iter().filter_map(|g| g.degree()).max().unwrap_or(0);
    let p = ring.characteristic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'attempt: for _ in 0..40 {
        let mut seq: Vec<Polynomial> = Vec::with_capacity(c);
        while seq.len() < c {
            let mut f = ring.zero();
            for g in &gens {
                let lift = top - g.degree().unwrap();
                let mut lin = ring.zero();
                for v in 0..ring.nvars() {
                    lin = lin.add(&ring.var(v).scale(rng.gen_range(0..p)))?;
                }
                let coeff = if lift == 0 { Polynomial::constant(ring, rng.gen_range(0..p)) } else { lin.pow(lift as u64) };
                f = f.add(&g.mul(&coeff)?)?;
            }
            if f.is_zero() {
                continue 'attempt;
            }
            seq.push(f);
            if Ideal::new(ring, seq.clone())?.height()? != seq.len() {
                continue 'attempt;
            }
        }
        return Ok(seq);
    }
    Err(AlgebraError::HypothesisFailed("no regular sequence of full length found among generator combinations".into()))
}

/// Kernel of the natural map `R/J^i -> Ext^c(Ext^c(R/J^i, S), S)`,
/// `c = h + 1`, as an ideal of S containing `P + J^i`.
///
/// For a regular sequence `f` of length `c` inside `I = P + J^i`, both Ext
/// layers are `Hom` into `S/(f)`, and the natural map becomes
/// `S/I -> ((f) : ((f) : I)) / (f)`.
pub fn double_ext_kernel(r: &QuotientRingSpec, j: &Ideal, i: u32) -> Result<Ideal> {
    let big = r.power(j, i)?;
    let f = Ideal::new(r.ambient(), regular_sequence_in(&big, 0x5eed)?)?;
    let link = ideals::colon_ideal(&f, &big)?;
    let back = ideals::colon_ideal(&f, &link)?;
    ideals::sum(&back, &big)
}

/// Whether the kernel of the double-Ext map equals `J^(i)/J^i`, with the
/// symbolic power taken as a saturation at `sat`.
pub fn double_ext_kernel_check(r: &QuotientRingSpec, j: &Ideal, i: u32, sat: &Ideal) -> Result<bool> {
    let kernel = double_ext_kernel(r, j, i)?;
    let symbolic = r.symbolic_power(j, i, sat)?;
    Ok(kernel.contains_ideal(&symbolic)? && symbolic.contains_ideal(&kernel)?)
}
