//! Koszul cocomplexes on powers of a sequence, the comparison maps between
//! them, annihilation exponents and local cohomology bounds.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::ideals::QuotientRingSpec;
use crate::poly::{Polynomial, PolynomialRing};
use crate::resolutions::{preimage, FreeMap, PresentedModule, SubmoduleBasis, Subquotient};

/// A sequence `x_1..x_d` acting on a module `M = coker(A)` over S.
#[derive(Clone, Debug)]
pub struct KoszulSystem {
    sequence: Vec<Polynomial>,
    module: PresentedModule,
    subsets: Vec<Vec<u32>>,
}

fn subsets_of_size(d: usize, i: usize) -> Vec<u32> {
    (0u32..1 << d).filter(|m| m.count_ones() as usize == i).collect()
}

impl KoszulSystem {
    pub fn new(sequence: Vec<Polynomial>, module: PresentedModule) -> Result<Self> {
        if sequence.is_empty() {
            return Err(AlgebraError::InvalidRange("empty sequence".into()));
        }
        if sequence.len() > 16 {
            return Err(AlgebraError::ResourceLimit("sequences longer than 16".into()));
        }
        for x in &sequence {
            module.ring().check_same(x.ring())?;
            if x.is_zero() {
                return Err(AlgebraError::InvalidRange("zero element in sequence".into()));
            }
        }
        let d = sequence.len();
        let subsets = (0..=d).map(|i| subsets_of_size(d, i)).collect();
        Ok(KoszulSystem { sequence, module, subsets })
    }

    /// The sequence acting on `R/I` for an ideal `I` of `R`.
    pub fn on_quotient(r: &QuotientRingSpec, i: &Ideal, sequence: Vec<Polynomial>) -> Result<Self> {
        for x in &sequence {
            if r.is_zero(x)? {
                return Err(AlgebraError::InvalidRange(format!("{x} is zero in the ring")));
            }
        }
        let lifted = r.lift(i)?;
        Self::new(sequence, PresentedModule::quotient(&lifted)?)
    }

    pub fn ring(&self) -> &PolynomialRing {
        self.module.ring()
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[Polynomial] {
        &self.sequence
    }

    pub fn module(&self) -> &PresentedModule {
        &self.module
    }

    /// The same module with the sequence `x_1^j..x_d^j`.
    pub fn powered(&self, j: u32) -> Result<KoszulSystem> {
        KoszulSystem::new(self.sequence.iter().map(|x| x.pow(j as u64)).collect(), self.module.clone())
    }

    /// Index sets of the basis of `K^i`, as bitmasks in increasing order.
    pub fn subsets(&self, i: usize) -> &[u32] {
        &self.subsets[i]
    }

    /// Rank of the free cover of `K^i`.
    pub fn cover_rank(&self, i: usize) -> usize {
        self.subsets[i].len() * self.module.num_generators()
    }

    fn check_degree(&self, i: usize) -> Result<()> {
        if i > self.len() {
            return Err(AlgebraError::InvalidRange(format!("degree {i} exceeds sequence length {}", self.len())));
        }
        Ok(())
    }

    fn weight(&self, mask: u32, j: u32) -> i64 {
        self.sequence
            .iter()
            .enumerate()
            .filter(|(t, _)| mask >> t & 1 == 1)
            .map(|(_, x)| x.degree().unwrap_or(0) as i64 * j as i64)
            .sum()
    }

    fn cover_degrees(&self, i: usize, j: u32) -> Vec<i64> {
        let gens = self.module.presentation().row_degrees();
        let mut out = Vec::with_capacity(self.cover_rank(i));
        for &t in &self.subsets[i] {
            let w = self.weight(t, j);
            out.extend(gens.iter().map(|g| g - w));
        }
        out
    }

    fn monomial_product(&self, mask: u32, k: u32) -> Polynomial {
        let mut acc = self.ring().one();
        for (t, x) in self.sequence.iter().enumerate() {
            if mask >> t & 1 == 1 {
                acc = acc.mul(&x.pow(k as u64)).expect("same ring");
            }
        }
        acc
    }

    /// Relations of `K^i = M^{C(d,i)}` on its free cover.
    pub fn relations(&self, i: usize, j: u32) -> Result<FreeMap> {
        self.check_degree(i)?;
        let a = self.module.presentation();
        let r = a.nrows();
        let mut cols = Vec::new();
        for (b, _) in self.subsets[i].iter().enumerate() {
            for col in a.columns() {
                let mut v = vec![self.ring().zero(); self.cover_rank(i)];
                v[b * r..(b + 1) * r].clone_from_slice(col);
                cols.push(v);
            }
        }
        FreeMap::with_row_degrees(self.ring(), self.cover_degrees(i, j), cols)
    }

    /// `K^i -> K^{i+1}` on free covers for the sequence `x^j`.
    pub fn differential(&self, i: usize, j: u32) -> Result<FreeMap> {
        self.check_degree(i + 1)?;
        let r = self.module.num_generators();
        let zero = self.ring().zero();
        let targets: HashMap<u32, usize> = self.subsets[i + 1].iter().enumerate().map(|(b, &m)| (m, b)).collect();
        let powers: Vec<Polynomial> = self.sequence.iter().map(|x| x.pow(j as u64)).collect();
        let mut cols = Vec::with_capacity(self.cover_rank(i));
        for &t in &self.subsets[i] {
            for c in 0..r {
                let mut v = vec![zero.clone(); self.cover_rank(i + 1)];
                for (s, xs) in powers.iter().enumerate() {
                    if t >> s & 1 == 1 {
                        continue;
                    }
                    let below = (t & ((1u32 << s) - 1)).count_ones();
                    let entry = if below.is_multiple_of(2) { xs.clone() } else { xs.neg() };
                    v[targets[&(t | 1 << s)] * r + c] = entry;
                }
                cols.push(v);
            }
        }
        let mut map = FreeMap::with_row_degrees(self.ring(), self.cover_degrees(i + 1, j), cols)?;
        if map.ncols() > 0 {
            map = map.with_col_degrees(self.cover_degrees(i, j));
        }
        Ok(map)
    }
}

/// `K^•(x^j; M)`: differentials and the relations of each term.
#[derive(Clone, Debug)]
pub struct KoszulCocomplex {
    pub exponent: u32,
    /// `differentials[i]: K^i -> K^{i+1}` on free covers.
    pub differentials: Vec<FreeMap>,
    /// `relations[i]` presents `K^i`.
    pub relations: Vec<FreeMap>,
}

impl KoszulCocomplex {
    /// Consecutive composites land in the relations.
    pub fn is_complex(&self) -> Result<bool> {
        for (i, w) in self.differentials.windows(2).enumerate() {
            let comp = w[1].compose(&w[0])?;
            let rel = SubmoduleBasis::of_image(&self.relations[i + 2])?;
            if !rel.contains_all(comp.columns()) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn koszul_cocomplex(sys: &KoszulSystem, j: u32) -> Result<KoszulCocomplex> {
    if j == 0 {
        return Err(AlgebraError::InvalidRange("exponent must be at least 1".into()));
    }
    let d = sys.len();
    Ok(KoszulCocomplex {
        exponent: j,
        differentials: (0..d).map(|i| sys.differential(i, j)).collect::<Result<_>>()?,
        relations: (0..=d).map(|i| sys.relations(i, j)).collect::<Result<_>>()?,
    })
}

/// `K^i(x^{j1}; M) -> K^i(x^{j2}; M)`: strand `T` is multiplication by
/// `(prod_{t in T} x_t)^{j2 - j1}`.
pub fn alpha_chain_map(sys: &KoszulSystem, i: usize, j1: u32, j2: u32) -> Result<FreeMap> {
    if j1 > j2 {
        return Err(AlgebraError::InvalidRange(format!("comparison map from exponent {j1} to {j2}")));
    }
    sys.check_degree(i)?;
    let r = sys.module.num_generators();
    let n = sys.cover_rank(i);
    let zero = sys.ring().zero();
    let mut cols = Vec::with_capacity(n);
    for (b, &t) in sys.subsets[i].iter().enumerate() {
        let f = sys.monomial_product(t, j2 - j1);
        for c in 0..r {
            let mut v = vec![zero.clone(); n];
            v[b * r + c] = f.clone();
            cols.push(v);
        }
    }
    let map = FreeMap::with_row_degrees(sys.ring(), sys.cover_degrees(i, j2), cols)?;
    Ok(map.with_col_degrees(sys.cover_degrees(i, j1)))
}

/// Generators of the cocycles in `K^i(x^j; M)`, as columns of the free cover.
pub fn cocycles(sys: &KoszulSystem, i: usize, j: u32) -> Result<FreeMap> {
    sys.check_degree(i)?;
    if i == sys.len() {
        let mut id = FreeMap::identity(sys.ring(), sys.cover_rank(i));
        id.set_row_degrees(sys.cover_degrees(i, j));
        return Ok(id);
    }
    preimage(&sys.differential(i, j)?, &sys.relations(i + 1, j)?)
}

/// Generators of the coboundaries plus the relations of `K^i(x^j; M)`.
pub fn coboundaries(sys: &KoszulSystem, i: usize, j: u32) -> Result<FreeMap> {
    let rel = sys.relations(i, j)?;
    if i == 0 {
        return Ok(rel);
    }
    sys.differential(i - 1, j)?.hconcat(&rel)
}

/// `H^i(x^j; M)` with a lift of each generator to the free cover of `K^i`.
pub fn koszul_cohomology(sys: &KoszulSystem, i: usize, j: u32) -> Result<Subquotient> {
    if j == 0 {
        return Err(AlgebraError::InvalidRange("exponent must be at least 1".into()));
    }
    Subquotient::new(&cocycles(sys, i, j)?, &coboundaries(sys, i, j)?)
}

/// A class of `H^i(x^j; M)` given by a representative on the free cover.
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    pub degree: usize,
    pub exponent: u32,
    pub representative: Vec<Polynomial>,
}

/// A least exponent, or the search bound when none was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Epsilon {
    Value(u32),
    Unstabilized(u32),
}

impl Epsilon {
    pub fn value(self) -> Option<u32> {
        match self {
            Epsilon::Value(v) => Some(v),
            Epsilon::Unstabilized(_) => None,
        }
    }
}

impl std::fmt::Display for Epsilon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Epsilon::Value(v) => write!(f, "{v}"),
            Epsilon::Unstabilized(k) => write!(f, "UNSTABILIZED({k})"),
        }
    }
}

/// Least `k <= k_max` with `alpha_{j,j+k}(eta) = 0`.
pub fn epsilon(sys: &KoszulSystem, eta: &CohomologyClass, k_max: u32) -> Result<Epsilon> {
    let (i, j) = (eta.degree, eta.exponent);
    sys.check_degree(i)?;
    if eta.representative.len() != sys.cover_rank(i) {
        return Err(AlgebraError::DimensionMismatch(format!(
            "representative of length {} in a cover of rank {}",
            eta.representative.len(),
            sys.cover_rank(i)
        )));
    }
    if i < sys.len() {
        let image = sys.differential(i, j)?.apply(&eta.representative)?;
        if !SubmoduleBasis::of_image(&sys.relations(i + 1, j)?)?.contains(&image) {
            return Err(AlgebraError::NotACocycle);
        }
    }
    for k in 0..=k_max {
        let pushed = alpha_chain_map(sys, i, j, j + k)?.apply(&eta.representative)?;
        if SubmoduleBasis::of_image(&coboundaries(sys, i, j + k)?)?.contains(&pushed) {
            return Ok(Epsilon::Value(k));
        }
    }
    Ok(Epsilon::Unstabilized(k_max))
}

/// The overall bound of a truncated search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LcbBound {
    Value(u32),
    /// Some searched class needs at least this many steps.
    UnknownAbove(u32),
}

impl std::fmt::Display for LcbBound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LcbBound::Value(v) => write!(f, "{v}"),
            LcbBound::UnknownAbove(v) => write!(f, "UNKNOWN_ABOVE({v})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Certification {
    CertifiedEqual,
    LowerBound,
    Unstabilized,
}

impl std::fmt::Display for Certification {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Certification::CertifiedEqual => "CERTIFIED_EQUAL",
            Certification::LowerBound => "LOWER_BOUND",
            Certification::Unstabilized => "UNSTABILIZED",
        })
    }
}

/// One exponent `j` of an lcb search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcbRow {
    pub j: u32,
    /// First `k` with `ker(alpha_{j,j+k}) = ker(alpha_{j,j+k+1})`.
    pub plateau: Option<u32>,
    /// Largest annihilation exponent over classes dying within the search.
    pub epsilon: Epsilon,
    /// Whether some nonzero class of `H^i(x^j; M)` dies within the search.
    pub has_dying_classes: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LcbReport {
    pub degree: usize,
    pub j_max: u32,
    pub k_max: u32,
    pub rows: Vec<LcbRow>,
    pub bound: LcbBound,
    pub certification: Certification,
}

impl LcbReport {
    /// The bound when the search certified it.
    pub fn certified_value(&self) -> Option<u32> {
        match (self.certification, self.bound) {
            (Certification::CertifiedEqual, LcbBound::Value(v)) => Some(v),
            _ => None,
        }
    }

    /// A value the true bound is known to be at least.
    pub fn lower_bound(&self) -> u32 {
        match self.bound {
            LcbBound::Value(v) | LcbBound::UnknownAbove(v) => v,
        }
    }
}

/// Kernels `ker(alpha_{j,j+k})`, `k = 0..=k_max`, as submodules of the
/// free cover of `K^i(x^j; M)` containing the coboundaries.
pub fn alpha_kernel_chain(sys: &KoszulSystem, i: usize, j: u32, k_max: u32) -> Result<Vec<SubmoduleBasis>> {
    let mut cache = HashMap::new();
    kernel_chain(sys, i, j, k_max, &mut cache)
}

fn kernel_chain(
    sys: &KoszulSystem,
    i: usize,
    j: u32,
    k_max: u32,
    boundaries: &mut HashMap<u32, FreeMap>,
) -> Result<Vec<SubmoduleBasis>> {
    let mut b = |e: u32| -> Result<FreeMap> {
        if let Some(m) = boundaries.get(&e) {
            return Ok(m.clone());
        }
        let m = coboundaries(sys, i, e)?;
        boundaries.insert(e, m.clone());
        Ok(m)
    };
    let z = cocycles(sys, i, j)?;
    let bj = b(j)?;
    let rank = sys.cover_rank(i);
    let mut chain = Vec::with_capacity(k_max as usize + 1);
    for k in 0..=k_max {
        let pushed = alpha_chain_map(sys, i, j, j + k)?.compose(&z)?;
        let coeffs = preimage(&pushed, &b(j + k)?)?;
        let mut gens: Vec<Vec<Polynomial>> = z.compose(&coeffs)?.columns().to_vec();
        gens.extend(bj.columns().iter().cloned());
        chain.push(SubmoduleBasis::compute(sys.ring(), rank, &gens)?);
    }
    Ok(chain)
}

/// Truncated search for `lcb_i(x; M)` over `j = 1..=j_max`, `k = 0..=k_max`.
pub fn lcb_estimate(sys: &KoszulSystem, i: usize, j_max: u32, k_max: u32) -> Result<LcbReport> {
    if j_max == 0 || k_max == 0 {
        return Err(AlgebraError::InvalidRange("search bounds must be at least 1".into()));
    }
    sys.check_degree(i)?;
    let mut cache = HashMap::new();
    let mut rows = Vec::with_capacity(j_max as usize);
    for j in 1..=j_max {
        let chain = kernel_chain(sys, i, j, k_max, &mut cache)?;
        let last = chain.last().expect("k_max >= 1");
        let plateau = chain.windows(2).position(|w| w[0] == w[1]).map(|k| k as u32);
        let epsilon = if chain[chain.len() - 2] != *last {
            Epsilon::Unstabilized(k_max)
        } else {
            Epsilon::Value(chain.iter().position(|c| c == last).expect("present") as u32)
        };
        rows.push(LcbRow { j, plateau, epsilon, has_dying_classes: *last != chain[0] });
    }
    let unstable = rows.iter().any(|r| r.epsilon.value().is_none());
    let top = rows
        .iter()
        .map(|r| match r.epsilon {
            Epsilon::Value(v) | Epsilon::Unstabilized(v) => v,
        })
        .max()
        .unwrap_or(0);
    let (bound, certification) = if unstable {
        (LcbBound::UnknownAbove(top), Certification::Unstabilized)
    } else {
        let tail_steady = rows.len() >= 2 && rows[rows.len() - 1].epsilon == rows[rows.len() - 2].epsilon;
        let c = if tail_steady { Certification::CertifiedEqual } else { Certification::LowerBound };
        (LcbBound::Value(top), c)
    };
    Ok(LcbReport { degree: i, j_max, k_max, rows, bound, certification })
}
