//! Frobenius powers in `R = S/P`: tight-closure evidence, degeneracy-ideal
//! chains, Hilbert–Kunz and F-signature tables, and the colon and Ext
//! checkers attached to suitable parameters.

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{AlgebraError, Result};
use crate::groebner::{Ideal, Length};
use crate::ideals::{self, QuotientRingSpec};
use crate::poly::Polynomial;
use crate::resolutions::{annihilates, ext_module, PresentedModule};

fn ser_ratio<S: Serializer>(r: &Ratio<i128>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

fn ser_opt_ratio<S: Serializer>(r: &Option<Ratio<i128>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => ser_ratio(r, s),
        None => s.serialize_none(),
    }
}

fn finite(len: Length) -> Result<u64> {
    len.finite().ok_or(AlgebraError::NotPrimary)
}

fn q_of(r: &QuotientRingSpec, e: u32) -> Result<u64> {
    (r.ambient().characteristic() as u64)
        .checked_pow(e)
        .filter(|q| *q <= u32::MAX as u64)
        .ok_or(AlgebraError::ExponentOverflow)
}

fn normalized(len: u64, q: u64, d: usize) -> Result<Ratio<i128>> {
    let den = (q as i128).checked_pow(d as u32).ok_or(AlgebraError::ExponentOverflow)?;
    Ok(Ratio::new(len as i128, den))
}

/// Data attached to a canonical ideal `J_1` of `R` and parameters
/// `x_1 ∈ J_1, x_2..x_d`.
#[derive(Clone, Debug)]
pub struct SuitableParams {
    pub ring: QuotientRingSpec,
    /// Canonical ideal, as a preimage in S.
    pub j1: Ideal,
    /// Exponent with `J_1^(m)` principal in codimension 2.
    pub m: u32,
    pub x: Vec<Polynomial>,
    pub a2: Option<Polynomial>,
    pub a3: Option<Polynomial>,
    /// Generator of the socle of `R/(J_1, x_2..x_d)`.
    pub u: Polynomial,
    /// Anti-canonical ideal; `((x_1) : J_1)` when absent.
    pub k1: Option<Ideal>,
    /// Ideal whose saturation defines symbolic powers; the maximal ideal by default.
    pub sat: Option<Ideal>,
}

impl SuitableParams {
    pub fn d(&self) -> usize {
        self.x.len()
    }

    pub fn saturating_ideal(&self) -> Result<Ideal> {
        match &self.sat {
            Some(s) => Ok(s.clone()),
            None => self.ring.maximal(),
        }
    }

    pub fn symbolic_j1(&self, n: u32) -> Result<Ideal> {
        self.ring.symbolic_power(&self.j1, n, &self.saturating_ideal()?)
    }

    pub fn anticanonical(&self) -> Result<Ideal> {
        match &self.k1 {
            Some(k) => self.ring.lift(k),
            None => self.ring.colon_ideal(&Ideal::new(self.ring.ambient(), vec![self.x[0].clone()])?, &self.j1),
        }
    }

    /// `K_1^(n)`; the unit ideal for `n = 0`.
    pub fn symbolic_anticanonical(&self, n: u32) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(self.ring.ambient()));
        }
        self.ring.symbolic_power(&self.anticanonical()?, n, &self.saturating_ideal()?)
    }

    /// `(J_1, x_2, .., x_d)`.
    pub fn socle_ideal(&self) -> Result<Ideal> {
        let mut gens = self.j1.generators().to_vec();
        gens.extend(self.x[1..].iter().cloned());
        self.ring.ideal(gens)
    }

    /// `I_t = (x_1^{t-1} J_1, x_2^t, .., x_d^t)`.
    pub fn i_t(&self, t: u32) -> Result<Ideal> {
        let lead = self.x[0].pow(t as u64 - 1);
        let mut gens: Vec<Polynomial> = self.j1.generators().iter().map(|g| g.mul(&lead)).collect::<Result<_>>()?;
        gens.extend(self.x[1..].iter().map(|x| x.pow(t as u64)));
        self.ring.ideal(gens)
    }

    /// `u_t = u (x_1 .. x_d)^{t-1}`.
    pub fn u_t(&self, t: u32) -> Result<Polynomial> {
        let mut acc = self.u.clone();
        for x in &self.x {
            acc = acc.mul(&x.pow(t as u64 - 1))?;
        }
        Ok(acc)
    }

    /// Checks the defining conditions that are decidable here.
    pub fn validate(&self) -> Result<()> {
        let r = &self.ring;
        let bad = |s: String| Err(AlgebraError::InvalidSuitableData(s));
        if self.x.len() != r.dim() {
            return bad(format!("{} parameters for a ring of dimension {}", self.x.len(), r.dim()));
        }
        if self.x.len() < 2 {
            return bad("at least two parameters are needed".into());
        }
        if self.m == 0 {
            return bad("m must be positive".into());
        }
        if r.lift(&self.j1)?.is_unit()? {
            return bad("J1 is the unit ideal".into());
        }
        if r.krull_dimension(&self.j1)? + 1 != r.dim() {
            return bad("J1 does not have height 1".into());
        }
        if !r.contains(&self.j1, &self.x[0])? || r.is_zero(&self.x[0])? {
            return bad("x1 is not a nonzero element of J1".into());
        }
        let i = self.socle_ideal()?;
        if !r.colength(&i)?.is_finite() {
            return bad("(J1, x2, .., xd) is not primary to the maximal ideal".into());
        }
        if r.contains(&i, &self.u)? {
            return bad("u lies in (J1, x2, .., xd)".into());
        }
        let m = r.maximal()?;
        let ideal_u = Ideal::new(r.ambient(), vec![self.u.clone()])?;
        if !r.contains_ideal(&i, &r.product(&m, &ideal_u)?)? {
            return bad("u is not in the socle of R/(J1, x2, .., xd)".into());
        }
        let socle = r.colon_ideal(&i, &m)?;
        let dim = finite(r.colength(&i)?)? - finite(r.colength(&socle)?)?;
        if dim != 1 {
            return bad(format!("socle of R/(J1, x2, .., xd) has dimension {dim}"));
        }
        if let Some(a2) = &self.a2 {
            if !r.contains(&self.j1, a2)? {
                return bad("a2 is not in J1".into());
            }
        }
        if let Some(a3) = &self.a3 {
            if !r.contains(&self.symbolic_j1(self.m)?, a3)? {
                return bad("a3 is not in J1^(m)".into());
            }
        }
        Ok(())
    }

    /// `x_2 J_1 ⊆ a_2 R`, when `a_2` is supplied.
    pub fn a2_condition(&self) -> Result<Option<bool>> {
        let Some(a2) = &self.a2 else { return Ok(None) };
        let lhs = self.ring.product(&Ideal::new(self.ring.ambient(), vec![self.x[1].clone()])?, &self.j1)?;
        Ok(Some(self.ring.contains_ideal(&self.ring.ideal(vec![a2.clone()])?, &lhs)?))
    }

    /// `x_3 J_1^(m) ⊆ a_3 R`, when `a_3` is supplied and `d >= 3`.
    pub fn a3_condition(&self) -> Result<Option<bool>> {
        let (Some(a3), Some(x3)) = (&self.a3, self.x.get(2)) else { return Ok(None) };
        let lhs = self.ring.product(&Ideal::new(self.ring.ambient(), vec![x3.clone()])?, &self.symbolic_j1(self.m)?)?;
        Ok(Some(self.ring.contains_ideal(&self.ring.ideal(vec![a3.clone()])?, &lhs)?))
    }
}

/// Bounded evidence for tight-closure membership.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TcVerdict {
    InClosureUpTo(u32),
    /// `c r^{p^e}` escapes `I^{[p^e]}` at this `e`.
    NotInClosure(u32),
}

impl std::fmt::Display for TcVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TcVerdict::InClosureUpTo(e) => write!(f, "IN_CLOSURE_UP_TO({e})"),
            TcVerdict::NotInClosure(e) => write!(f, "NOT_IN_CLOSURE({e})"),
        }
    }
}

/// Checks `c r^{p^e} ∈ I^{[p^e]}` for `e = 1..=e_max`.
pub fn tc_member(r: &QuotientRingSpec, f: &Polynomial, i: &Ideal, c: &Polynomial, e_max: u32) -> Result<TcVerdict> {
    if r.is_zero(c)? {
        return Err(AlgebraError::InvalidTestElement);
    }
    for e in 1..=e_max {
        let q = q_of(r, e)?;
        let target = r.bracket_power(i, q)?;
        if !target.contains(&c.mul(&f.frobenius(q)?)?)? {
            return Ok(TcVerdict::NotInClosure(e));
        }
    }
    Ok(TcVerdict::InClosureUpTo(e_max))
}

/// `(I_t^{[q]} : u_t^q)` for `t = 1..=t_max`, `q = p^e`.
#[derive(Clone, Debug)]
pub struct DegeneracyChain {
    pub e: u32,
    pub steps: Vec<Ideal>,
    /// Least `t` whose ideal equals the last computed one.
    pub stabilization_index: u32,
    /// Whether the last two computed ideals agree.
    pub stabilized: bool,
}

impl DegeneracyChain {
    /// The ideal at `t_max`: the degeneracy ideal when the chain has settled.
    pub fn candidate(&self) -> &Ideal {
        self.steps.last().expect("t_max >= 2")
    }
}

pub fn degeneracy_chain(sp: &SuitableParams, e: u32, t_max: u32) -> Result<DegeneracyChain> {
    if t_max < 2 {
        return Err(AlgebraError::InvalidRange("t_max must be at least 2".into()));
    }
    let r = &sp.ring;
    let q = q_of(r, e)?;
    let mut steps: Vec<Ideal> = Vec::with_capacity(t_max as usize);
    for t in 1..=t_max {
        let ut = sp.u_t(t)?;
        let step = r.colon(&r.bracket_power(&sp.i_t(t)?, q)?, &ut.frobenius(q)?)?.reduced()?;
        if step.is_unit()? {
            return Err(AlgebraError::InvalidSuitableData(format!("u_{t}^q lies in I_{t}^[q]")));
        }
        if let Some(prev) = steps.last() {
            if !step.contains_ideal(prev)? {
                return Err(AlgebraError::InvalidSuitableData(format!("chain not ascending at t = {t}")));
            }
        }
        steps.push(step);
    }
    let last = &steps[steps.len() - 1];
    let mut stabilization_index = t_max;
    for (t, s) in steps.iter().enumerate() {
        if s.same_ideal(last)? {
            stabilization_index = t as u32 + 1;
            break;
        }
    }
    let stabilized = steps[steps.len() - 2].same_ideal(last)?;
    Ok(DegeneracyChain { e, steps, stabilization_index, stabilized })
}

/// One `e` of a Frobenius table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusRow {
    pub e: u32,
    pub q: u64,
    /// `λ(R/I^{[q]})`.
    pub length: u64,
    #[serde(serialize_with = "ser_ratio")]
    pub ratio: Ratio<i128>,
    /// `λ(R/I_e)` for the degeneracy candidate.
    pub degeneracy_length: Option<u64>,
    #[serde(serialize_with = "ser_opt_ratio")]
    pub s_e: Option<Ratio<i128>>,
    pub stabilized: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub d: usize,
    pub rows: Vec<FrobeniusRow>,
}

/// `λ(R/I^{[p^e]})` and its ratio to `p^{ed}` at a single `e`.
pub fn hk_row(r: &QuotientRingSpec, i: &Ideal, e: u32) -> Result<FrobeniusRow> {
    let q = q_of(r, e)?;
    let length = finite(r.colength(&r.bracket_power(i, q)?)?)?;
    Ok(FrobeniusRow {
        e,
        q,
        length,
        ratio: normalized(length, q, r.dim())?,
        degeneracy_length: None,
        s_e: None,
        stabilized: None,
    })
}

/// [`hk_row`] for `e = 1..=e_max`.
pub fn hk_estimate(r: &QuotientRingSpec, i: &Ideal, e_max: u32) -> Result<FrobeniusReport> {
    if !r.colength(i)?.is_finite() {
        return Err(AlgebraError::NotPrimary);
    }
    let rows = (1..=e_max).map(|e| hk_row(r, i, e)).collect::<Result<_>>()?;
    Ok(FrobeniusReport { d: r.dim(), rows })
}

/// `s_e = λ(R/I_e)/p^{ed}` from the degeneracy chain at one `e`; the
/// `length` column holds `λ(R/I_1^{[q]})`. Assumes validated data.
pub fn fsig_row(sp: &SuitableParams, e: u32, t_max: u32) -> Result<FrobeniusRow> {
    let r = &sp.ring;
    let d = r.dim();
    let q = q_of(r, e)?;
    let chain = degeneracy_chain(sp, e, t_max)?;
    let de = finite(r.colength(chain.candidate())?)?;
    let length = finite(r.colength(&r.bracket_power(&sp.i_t(1)?, q)?)?)?;
    Ok(FrobeniusRow {
        e,
        q,
        length,
        ratio: normalized(length, q, d)?,
        degeneracy_length: Some(de),
        s_e: Some(normalized(de, q, d)?),
        stabilized: Some(chain.stabilized),
    })
}

/// [`fsig_row`] for `e = 1..=e_max`.
pub fn fsig_estimate(sp: &SuitableParams, e_max: u32, t_max: u32) -> Result<FrobeniusReport> {
    sp.validate()?;
    let rows = (1..=e_max).map(|e| fsig_row(sp, e, t_max)).collect::<Result<_>>()?;
    Ok(FrobeniusReport { d: sp.ring.dim(), rows })
}

/// One `e` of the comparison `λ(R/I_e) = λ(R/I^{[q]}) - λ(R/(I,u)^{[q]})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WyRow {
    pub e: u32,
    pub degeneracy_length: u64,
    pub relative_hk: u64,
    pub equal: bool,
    pub stabilized: bool,
}

/// Compares the chain's candidate at one `e` with the relative
/// bracket-power colength of `(I_{t0}, u_{t0})`. Assumes validated data.
pub fn wy_row(sp: &SuitableParams, e: u32, t_max: u32, t0: u32) -> Result<WyRow> {
    if t0 == 0 {
        return Err(AlgebraError::InvalidRange("t0 must be at least 1".into()));
    }
    let r = &sp.ring;
    let i = sp.i_t(t0)?;
    let mut iu_gens = i.generators().to_vec();
    iu_gens.push(sp.u_t(t0)?);
    let iu = r.ideal(iu_gens)?;
    let q = q_of(r, e)?;
    let chain = degeneracy_chain(sp, e, t_max)?;
    let de = finite(r.colength(chain.candidate())?)?;
    let a = finite(r.colength(&r.bracket_power(&i, q)?)?)?;
    let b = finite(r.colength(&r.bracket_power(&iu, q)?)?)?;
    let rel = a - b;
    Ok(WyRow { e, degeneracy_length: de, relative_hk: rel, equal: de == rel, stabilized: chain.stabilized })
}

/// [`wy_row`] for `e = 1..=e_max`.
pub fn watanabe_yoshida_check(sp: &SuitableParams, e_max: u32, t_max: u32, t0: u32) -> Result<Vec<WyRow>> {
    sp.validate()?;
    (1..=e_max).map(|e| wy_row(sp, e, t_max, t0)).collect()
}

/// `λ(R/I_e) · λ(J/I) <= λ(R/I^{[q]}) - λ(R/J^{[q]})` for `I ⊊ J`, both primary
/// to the maximal ideal.
pub fn relative_hk_bound_check(r: &QuotientRingSpec, degeneracy: &Ideal, i: &Ideal, j: &Ideal, e: u32) -> Result<bool> {
    if !r.contains_ideal(j, i)? || r.same_ideal(i, j)? {
        return Err(AlgebraError::InvalidRange("expected a proper inclusion I ⊊ J".into()));
    }
    let q = q_of(r, e)?;
    let li = finite(r.colength(i)?)?;
    let lj = finite(r.colength(j)?)?;
    let de = finite(r.colength(degeneracy)?)?;
    let a = finite(r.colength(&r.bracket_power(i, q)?)?)?;
    let b = finite(r.colength(&r.bracket_power(j, q)?)?)?;
    Ok(de as u128 * (li - lj) as u128 <= (a - b) as u128)
}

/// Outcome of one part of the colon lemma.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum PartVerdict {
    Holds(bool),
    HypothesisFailed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonLemmaReport {
    pub part1: PartVerdict,
    pub part2: PartVerdict,
}

/// `(J_1^{(q)} or J_1^{[q]}, x_2^{N_2 q}, .., x_d^{N_d q})` with `x_k^{N_k q}`
/// replaced by `x_k^{top q}`.
fn colon_base(sp: &SuitableParams, big: &Ideal, n: &[u32], q: u64, k: usize, top: u32) -> Result<Ideal> {
    let mut gens = big.generators().to_vec();
    for (idx, x) in sp.x.iter().enumerate().skip(1) {
        let exp = if idx == k { top } else { n[idx - 1] };
        gens.push(x.pow(exp as u64 * q));
    }
    sp.ring.ideal(gens)
}

/// Part 1 compares three colon ideals by `x_2`-powers; part 2 tests the
/// containment for the index `k = min(3, d)` using `a_3` as the multiplier,
/// given `x_k^n J_1^(m) ⊆ a_3 R ⊆ J_1^(m)`. `n` lists `N_2..N_d`, or
/// `N_1..N_d` with `N_1` unused.
pub fn colon_lemma_check(sp: &SuitableParams, e: u32, n: &[u32], part2_n: u32) -> Result<ColonLemmaReport> {
    sp.validate()?;
    let d = sp.d();
    let n = match n.len() {
        l if l == d - 1 => n,
        l if l == d => &n[1..],
        l => return Err(AlgebraError::InvalidRange(format!("expected {} exponents N_2..N_d, got {l}", d - 1))),
    };
    let r = &sp.ring;
    let q = q_of(r, e)?;
    if n[0] < 2 {
        return Err(AlgebraError::InvalidRange("N_2 must be at least 2".into()));
    }
    match sp.a2_condition()? {
        None => return Err(AlgebraError::HypothesisFailed("a2 not supplied".into())),
        Some(false) => return Err(AlgebraError::HypothesisFailed("x2 J1 is not contained in a2 R".into())),
        Some(true) => {}
    }
    let symbolic = sp.symbolic_j1(q as u32)?;
    let bracket = r.bracket_power(&sp.j1, q)?;
    let x2 = &sp.x[1];
    let lhs = r.colon(&colon_base(sp, &symbolic, n, q, 1, n[0])?, &x2.pow((n[0] as u64 - 1) * q))?;
    let mid = r.colon(&colon_base(sp, &bracket, n, q, 1, n[0])?, &x2.pow((n[0] as u64 - 1) * q))?;
    let rhs = r.colon(&colon_base(sp, &bracket, n, q, 1, 2)?, &x2.pow(q))?;
    let part1 = PartVerdict::Holds(lhs.same_ideal(&mid)? && mid.same_ideal(&rhs)?);

    let k = d.min(3) - 1;
    let part2 = match &sp.a3 {
        None => PartVerdict::HypothesisFailed("a3 not supplied".into()),
        Some(_) if n[k - 1] < 2 => PartVerdict::HypothesisFailed(format!("N_{} must be at least 2", k + 1)),
        Some(a) => {
            let jm = sp.symbolic_j1(sp.m)?;
            let a_ideal = r.ideal(vec![a.clone()])?;
            let xk = &sp.x[k];
            let left = r.product(&r.ideal(vec![xk.pow(part2_n as u64)])?, &jm)?;
            if !r.contains_ideal(&a_ideal, &left)? || !r.contains(&jm, a)? {
                PartVerdict::HypothesisFailed(format!("x{}^{part2_n} J1^(m) ⊆ a3 R ⊆ J1^(m) fails", k + 1))
            } else {
                let big = r.colon(&colon_base(sp, &symbolic, n, q, k, n[k - 1])?, &xk.pow((n[k - 1] as u64 - 1) * q))?;
                let mult = sp.x[0].pow(sp.m as u64).mul(&xk.pow(q))?;
                let small = r.colon(&colon_base(sp, &symbolic, n, q, k, 2)?, &mult)?;
                PartVerdict::Holds(r.contains_ideal(&small, &big)?)
            }
        }
    };
    Ok(ColonLemmaReport { part1, part2 })
}

/// `Ext^{h+1}_S(R/J_1^{mi+1}, S)` as a module over S.
pub fn first_ext(sp: &SuitableParams, i: u32) -> Result<PresentedModule> {
    let r = &sp.ring;
    let pw = r.power(&sp.j1, sp.m * i + 1)?;
    ext_module(&PresentedModule::quotient(&pw)?, r.height() + 1)
}

/// One `j` of the Ext annihilation table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnnihilationRow {
    pub j: usize,
    /// One entry per `x_2^i .. x_{j+2}^i`.
    pub annihilates: Vec<bool>,
}

/// Whether `x_2^i, .., x_{j+2}^i` kill `Ext^{h+j}_S(Ext^{h+1}_S(R/J_1^{mi+1}, S), S)`
/// for each `j` of the range inside `2..=d-2`.
pub fn ext_annihilation_check(sp: &SuitableParams, i: u32, j_range: std::ops::RangeInclusive<usize>) -> Result<Vec<AnnihilationRow>> {
    sp.validate()?;
    let d = sp.d();
    let h = sp.ring.height();
    let js: Vec<usize> = j_range.filter(|&j| j >= 2 && j + 2 <= d).collect();
    if js.is_empty() {
        return Ok(Vec::new());
    }
    let inner = first_ext(sp, i)?;
    let mut rows = Vec::with_capacity(js.len());
    for j in js {
        let outer = ext_module(&inner, h + j)?;
        let flags = sp.x[1..j + 2]
            .iter()
            .map(|x| annihilates(&x.pow(i as u64), &outer))
            .collect::<Result<Vec<_>>>()?;
        rows.push(AnnihilationRow { j, annihilates: flags });
    }
    Ok(rows)
}

/// Hilbert functions of both sides of
/// `Ext^{h+1}_S(R/J_1^{mi+1}, S) ≅ x_1 K_1^(mi) / x_1^{mi+1} J_1`,
/// each listed from its first nonzero degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtIsoReport {
    pub ext_side: Vec<u64>,
    pub ideal_side: Vec<u64>,
    pub agree: bool,
}

pub fn ext_iso_hilbert_check(sp: &SuitableParams, i: u32, degree_bound: usize) -> Result<ExtIsoReport> {
    sp.validate()?;
    let r = &sp.ring;
    let n = sp.m * i;
    let window = 4 * degree_bound + 8;
    let ext = first_ext(sp, i)?;
    let lo = -(window as i64);
    let ext_side = ext.hilbert_from_initial_degree(lo, 2 * window, degree_bound)?;

    let x1 = &sp.x[0];
    let kn = sp.symbolic_anticanonical(n)?;
    let top = r.product(&r.ideal(vec![x1.clone()])?, &kn)?;
    let bottom = r.product(&r.ideal(vec![x1.pow(n as u64 + 1)])?, &sp.j1)?;
    let span = 2 * window + degree_bound;
    let hb = bottom.gb()?.hilbert_function(span as u32);
    let ht = top.gb()?.hilbert_function(span as u32);
    let diff: Vec<u64> = hb.iter().zip(&ht).map(|(a, b)| a - b).collect();
    let start = diff.iter().position(|&v| v != 0);
    let ideal_side = match start {
        Some(s) => (s..s + degree_bound).map(|k| diff.get(k).copied().unwrap_or(0)).collect(),
        None => vec![0; degree_bound],
    };
    let agree = ext_side == ideal_side;
    Ok(ExtIsoReport { ext_side, ideal_side, agree })
}

/// `m^{[q]} ⊆ I_e` and `I_e^{[p]} ⊆ I_{e+1}` for consecutive candidates.
pub fn chain_properties(sp: &SuitableParams, chains: &[DegeneracyChain]) -> Result<Vec<(u32, bool, Option<bool>)>> {
    let r = &sp.ring;
    let p = r.ambient().characteristic() as u64;
    let m = r.maximal()?;
    let mut out = Vec::with_capacity(chains.len());
    for (idx, c) in chains.iter().enumerate() {
        let q = q_of(r, c.e)?;
        let first = c.candidate().contains_ideal(&r.bracket_power(&m, q)?)?;
        let second = match chains.get(idx + 1) {
            Some(next) if next.e == c.e + 1 => Some(next.candidate().contains_ideal(&ideals::bracket_power(c.candidate(), p)?)?),
            _ => None,
        };
        out.push((c.e, first, second));
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
