//! Ideal calculus: sums, products, powers, intersections, colons,
//! saturation, elimination, Frobenius bracket powers and symbolic powers.

mod quotient;

pub use quotient::QuotientRingSpec;

use crate::error::{AlgebraError, Result};
use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, Polynomial, PolynomialRing};

/// Second operand of [`ideal_sum_product_power`].
#[derive(Clone, Debug)]
pub enum IdealOperand<'a> {
    Sum(&'a Ideal),
    Product(&'a Ideal),
    Power(u32),
}

pub fn ideal_sum_product_power(i: &Ideal, op: IdealOperand<'_>) -> Result<Ideal> {
    match op {
        IdealOperand::Sum(j) => sum(i, j),
        IdealOperand::Product(j) => product(i, j),
        IdealOperand::Power(n) => power(i, n),
    }
}

pub fn sum(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring().check_same(j.ring())?;
    let mut gens = i.generators().to_vec();
    gens.extend(j.generators().iter().cloned());
    Ideal::new(i.ring(), gens)
}

/// Sum of several ideals; all must share `ring`.
pub fn sum_all(ring: &PolynomialRing, ideals: &[&Ideal]) -> Result<Ideal> {
    let mut gens = Vec::new();
    for i in ideals {
        ring.check_same(i.ring())?;
        gens.extend(i.generators().iter().cloned());
    }
    Ideal::new(ring, gens)
}

fn dedup(mut gens: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = Vec::with_capacity(gens.len());
    gens.retain(|g| !g.is_zero());
    for g in gens {
        let g = g.monic();
        if !out.contains(&g) {
            out.push(g);
        }
    }
    out
}

pub fn product(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring().check_same(j.ring())?;
    let mut gens = Vec::with_capacity(i.generators().len() * j.generators().len());
    for a in i.generators() {
        for b in j.generators() {
            gens.push(a.mul(b)?);
        }
    }
    Ideal::new(i.ring(), dedup(gens))
}

/// `I^n` generated by all n-fold products of generators; `I^0` is the unit ideal.
pub fn power(i: &Ideal, n: u32) -> Result<Ideal> {
    if n == 0 {
        return Ok(Ideal::unit(i.ring()));
    }
    let base = dedup(i.generators().to_vec());
    // products indexed by non-decreasing index tuples, built degree by degree
    let mut layer: Vec<(usize, Polynomial)> = base.iter().enumerate().map(|(k, g)| (k, g.clone())).collect();
    for _ in 1..n {
        let mut next = Vec::new();
        for (last, f) in &layer {
            for (k, g) in base.iter().enumerate().skip(*last) {
                next.push((k, f.mul(g)?));
            }
        }
        layer = next;
    }
    Ideal::new(i.ring(), dedup(layer.into_iter().map(|(_, f)| f).collect()))
}

/// `I ∩ J` by eliminating a tag variable from `t·I + (1−t)·J`.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    let ring = i.ring();
    ring.check_same(j.ring())?;
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if i.is_unit()? {
        return Ok(j.clone());
    }
    if j.is_unit()? {
        return Ok(i.clone());
    }
    let tag = ring.fresh_name("t");
    let big = ring.prepend_vars(&[tag], MonomialOrder::Elimination(1))?;
    let t = big.var(0);
    let one_minus_t = big.one().sub(&t)?;
    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(t.mul(&g.map_by_names(&big)?)?);
    }
    for g in j.generators() {
        gens.push(one_minus_t.mul(&g.map_by_names(&big)?)?);
    }
    let kept = eliminate_front(&big, gens, 1)?;
    pull_back(ring, &big, 1, kept)
}

/// GB of `gens` in `big` (an elimination ring whose first `k` variables are
/// the ones to remove), keeping the elements free of those variables.
fn eliminate_front(big: &PolynomialRing, gens: Vec<Polynomial>, k: usize) -> Result<Vec<Polynomial>> {
    let ideal = Ideal::new(big, gens)?;
    let gb = ideal.gb()?;
    Ok(gb.basis().iter().filter(|g| (0..k).all(|v| !g.involves(v))).cloned().collect())
}

fn pull_back(ring: &PolynomialRing, big: &PolynomialRing, k: usize, polys: Vec<Polynomial>) -> Result<Ideal> {
    let map: Vec<usize> = (0..big.nvars())
        .map(|v| if v < k { 0 } else { ring.var_index(&big.names()[v]).expect("shared name") })
        .collect();
    Ideal::new(ring, polys.iter().map(|g| g.rename_into(ring, &map)).collect())
}

/// `I ∩ k[remaining variables]`, returned as an ideal of the same ring.
pub fn eliminate(i: &Ideal, vars: &[usize]) -> Result<Ideal> {
    let ring = i.ring();
    if vars.is_empty() {
        return Ok(i.clone());
    }
    let n = ring.nvars();
    if let Some(&bad) = vars.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::InvalidRange(format!("variable index {bad} out of range")));
    }
    let mut front: Vec<usize> = vars.to_vec();
    front.sort_unstable();
    front.dedup();
    let k = front.len();
    let rest: Vec<usize> = (0..n).filter(|v| !front.contains(v)).collect();
    let names: Vec<String> = front.iter().chain(&rest).map(|&v| ring.names()[v].clone()).collect();
    let big = PolynomialRing::new(*ring.field(), &names, MonomialOrder::Elimination(k))?;
    let gens = i.generators().iter().map(|g| g.map_by_names(&big)).collect::<Result<Vec<_>>>()?;
    let kept = eliminate_front(&big, gens, k)?;
    let back: Vec<usize> = (0..n).map(|v| ring.var_index(&big.names()[v]).expect("same names")).collect();
    Ideal::new(ring, kept.iter().map(|g| g.rename_into(ring, &back)).collect())
}

/// `(I : f)`, computed as `(I ∩ (f)) / f`.
pub fn colon(i: &Ideal, f: &Polynomial) -> Result<Ideal> {
    let ring = i.ring();
    ring.check_same(f.ring())?;
    if f.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    if f.is_unit() {
        return Ok(i.clone());
    }
    if i.contains(f)? {
        return Ok(Ideal::unit(ring));
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = intersect(i, &principal)?;
    let mut gens = Vec::with_capacity(meet.generators().len());
    for g in meet.gb()?.basis() {
        gens.push(g.exact_div(f)?.expect("elements of (f) are divisible by f"));
    }
    Ideal::new(ring, gens)
}

/// `(I : J)` as the intersection of the element colons over J's generators.
pub fn colon_ideal(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.ring().check_same(j.ring())?;
    let gens: Vec<&Polynomial> = j.generators().iter().collect();
    if gens.is_empty() {
        return Err(AlgebraError::DivisionByZero);
    }
    let mut acc = colon(i, gens[0])?;
    for g in &gens[1..] {
        acc = intersect(&acc, &colon(i, g)?)?;
    }
    acc.reduced()
}

/// `(I : f^∞)` and the first `k` with `I : f^k = I : f^(k+1)`.
pub fn saturate(i: &Ideal, f: &Polynomial) -> Result<(Ideal, u32)> {
    saturate_with(i, |cur| colon(cur, f))
}

/// `(I : J^∞)` by iterating colons by `J`, with the stabilizing exponent.
pub fn saturate_ideal(i: &Ideal, j: &Ideal) -> Result<(Ideal, u32)> {
    saturate_with(i, |cur| colon_ideal(cur, j))
}

fn saturate_with(i: &Ideal, step: impl Fn(&Ideal) -> Result<Ideal>) -> Result<(Ideal, u32)> {
    let mut cur = i.reduced()?;
    let mut k = 0;
    loop {
        let next = step(&cur)?.reduced()?;
        if next.gb()?.basis() == cur.gb()?.basis() {
            return Ok((cur, k));
        }
        cur = next;
        k += 1;
    }
}

/// `I^[q]`: the ideal of q-th powers of the generators, `q` a power of p.
pub fn bracket_power(i: &Ideal, q: u64) -> Result<Ideal> {
    let ring = i.ring();
    if ring.field().frobenius_exponent(q).is_none() {
        return Err(AlgebraError::InvalidFrobeniusPower { q, p: ring.characteristic() });
    }
    let gens = i.generators().iter().map(|g| g.frobenius(q)).collect::<Result<Vec<_>>>()?;
    Ideal::new(ring, gens)
}

/// `I^(n)` realized as `(I^n : sat^∞)`.
pub fn symbolic_power(i: &Ideal, n: u32, sat: &Ideal) -> Result<Ideal> {
    let pw = power(i, n)?;
    Ok(saturate_ideal(&pw, sat)?.0)
}
