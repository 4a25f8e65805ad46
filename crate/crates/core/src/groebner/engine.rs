//! Buchberger's algorithm over submodules of a free module `S^r`.
//!
//! Ideals are the rank-one case. Terms are ordered position-over-term with
//! lower component indices ranking higher, which is what the syzygy
//! computations rely on: a basis element whose leading term sits in
//! component `c` has zero entries in all components `< c`.

use std::cmp::Ordering;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::poly::{Coeff, Monomial, MonomialOrder, Polynomial, PolynomialRing, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct VTerm {
    pub comp: u32,
    pub mono: Monomial,
}

/// Sparse vector of polynomials, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Vector {
    pub terms: Vec<(VTerm, Coeff)>,
}

impl Vector {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_polynomial(p: &Polynomial, comp: u32) -> Self {
        Vector {
            terms: p.terms().iter().map(|(m, c)| (VTerm { comp, mono: m.clone() }, *c)).collect(),
        }
    }

    /// Builds from per-component polynomials (already canonical).
    pub fn from_columns(entries: &[Polynomial]) -> Self {
        let mut terms = Vec::new();
        for (i, p) in entries.iter().enumerate() {
            terms.extend(p.terms().iter().map(|(m, c)| (VTerm { comp: i as u32, mono: m.clone() }, *c)));
        }
        Vector { terms }
    }

    pub fn to_polynomial(&self, ring: &PolynomialRing) -> Polynomial {
        Polynomial::from_sorted(ring, self.terms.iter().map(|(t, c)| (t.mono.clone(), *c)).collect())
    }

    pub fn to_columns(&self, ring: &PolynomialRing, rank: usize) -> Vec<Polynomial> {
        let mut parts: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
        for (t, c) in &self.terms {
            parts[t.comp as usize].push((t.mono.clone(), *c));
        }
        parts.into_iter().map(|ts| Polynomial::from_sorted(ring, ts)).collect()
    }
}

fn step_limit() -> Option<u64> {
    static LIMIT: OnceLock<Option<u64>> = OnceLock::new();
    *LIMIT.get_or_init(|| std::env::var("CHARKIT_MAX_GB_STEPS").ok().and_then(|v| v.trim().parse().ok()))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    seq: u64,
}

#[derive(Clone, Copy)]
pub(crate) struct Engine {
    pub field: PrimeField,
    pub order: MonomialOrder,
    /// Rank-one case, enabling the coprime-leading-term criterion.
    pub ideal_case: bool,
}

impl Engine {
    pub fn for_ring(ring: &PolynomialRing, ideal_case: bool) -> Self {
        Engine { field: *ring.field(), order: ring.order(), ideal_case }
    }

    #[inline]
    pub fn cmp(&self, a: &VTerm, b: &VTerm) -> Ordering {
        b.comp.cmp(&a.comp).then_with(|| self.order.cmp(&a.mono, &b.mono))
    }

    /// `a - c * m * b`, with `a` and `b` descending.
    fn sub_mul(&self, a: &[(VTerm, Coeff)], c: Coeff, m: &Monomial, b: &[(VTerm, Coeff)]) -> Vec<(VTerm, Coeff)> {
        let f = &self.field;
        let negc = f.neg(c);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut scaled: Option<(VTerm, Coeff)> = None;
        loop {
            if scaled.is_none() && j < b.len() {
                let (t, v) = &b[j];
                scaled = Some((VTerm { comp: t.comp, mono: t.mono.mul(m) }, f.mul(negc, *v)));
                j += 1;
            }
            match (a.get(i), scaled.take()) {
                (None, None) => break,
                (Some(x), None) => {
                    out.push(x.clone());
                    i += 1;
                }
                (None, Some(y)) => out.push(y),
                (Some(x), Some(y)) => match self.cmp(&x.0, &y.0) {
                    Ordering::Greater => {
                        out.push(x.clone());
                        i += 1;
                        scaled = Some(y);
                    }
                    Ordering::Less => out.push(y),
                    Ordering::Equal => {
                        let s = f.add(x.1, y.1);
                        if s != 0 {
                            out.push((x.0.clone(), s));
                        }
                        i += 1;
                    }
                },
            }
        }
        out
    }

    fn make_monic(&self, v: &mut Vector) {
        if let Some(&(_, lc)) = v.terms.first() {
            if lc != 1 {
                let inv = self.field.inv(lc).expect("nonzero");
                for t in v.terms.iter_mut() {
                    t.1 = self.field.mul(t.1, inv);
                }
            }
        }
    }

    fn find_reducer(&self, t: &VTerm, mask: u64, basis: &[Vector], masks: &[u64], active: &[usize]) -> Option<usize> {
        for &k in active {
            let lt = &basis[k].terms[0].0;
            if lt.comp == t.comp && masks[k] & !mask == 0 && lt.mono.divides(&t.mono) {
                return Some(k);
            }
        }
        None
    }

    /// Full reduction of `f` against the (monic) elements `basis[active]`.
    pub fn reduce_with(&self, f: Vector, basis: &[Vector], masks: &[u64], active: &[usize], full: bool) -> Vector {
        let mut rem: Vec<(VTerm, Coeff)> = Vec::new();
        let mut cur = f.terms;
        let mut start = 0;
        while start < cur.len() {
            let (t, c) = (&cur[start].0, cur[start].1);
            let mask = t.mono.support_mask();
            match self.find_reducer(t, mask, basis, masks, active) {
                Some(k) => {
                    let g = &basis[k].terms;
                    let m = g[0].0.mono.quotient_of(&t.mono);
                    cur = self.sub_mul(&cur[start + 1..], c, &m, &g[1..]);
                    start = 0;
                }
                None => {
                    if !full {
                        rem.extend(cur.drain(start..));
                        break;
                    }
                    rem.push(cur[start].clone());
                    start += 1;
                }
            }
        }
        Vector { terms: rem }
    }

    /// Normal form with respect to a reduced basis.
    pub fn normal_form(&self, f: Vector, basis: &[Vector]) -> Vector {
        let masks: Vec<u64> = basis.iter().map(|g| g.terms[0].0.mono.support_mask()).collect();
        let active: Vec<usize> = (0..basis.len()).collect();
        self.reduce_with(f, basis, &masks, &active, true)
    }

    /// Reduced, monic Gröbner basis sorted by descending leading term.
    pub fn groebner(&self, gens: Vec<Vector>) -> Result<Vec<Vector>> {
        let limit = step_limit();
        let mut polys: Vec<Vector> = Vec::new();
        let mut masks: Vec<u64> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut seq = 0u64;
        let mut steps = 0u64;

        let mut gens: Vec<Vector> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by(|a, b| self.cmp(&a.terms[0].0, &b.terms[0].0).reverse());

        let mut pending: std::collections::VecDeque<Vector> = gens.into();
        loop {
            let h = if let Some(g) = pending.pop_front() {
                self.reduce_with(g, &polys, &masks, &active, true)
            } else {
                // normal selection: lowest lcm degree, then oldest
                let Some(best) = pairs
                    .iter()
                    .enumerate()
                    .min_by(|(_, a), (_, b)| a.lcm.degree().cmp(&b.lcm.degree()).then(a.seq.cmp(&b.seq)))
                    .map(|(k, _)| k)
                else {
                    break;
                };
                let pair = pairs.swap_remove(best);
                steps += 1;
                if let Some(l) = limit {
                    if steps > l {
                        return Err(AlgebraError::ResourceLimit(format!("Gröbner basis exceeded {l} pair reductions")));
                    }
                }
                let s = self.spoly(&polys[pair.i], &polys[pair.j], &pair.lcm);
                self.reduce_with(s, &polys, &masks, &active, true)
            };
            if h.is_zero() {
                continue;
            }
            let mut h = h;
            self.make_monic(&mut h);
            let hidx = polys.len();
            masks.push(h.terms[0].0.mono.support_mask());
            polys.push(h);
            self.update(&polys, &mut active, &mut pairs, hidx, &mut seq);
        }

        // interreduce the minimal basis
        let mut basis: Vec<Vector> = Vec::with_capacity(active.len());
        for (pos, &k) in active.iter().enumerate() {
            let others: Vec<usize> = active.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &i)| i).collect();
            let mut g = polys[k].clone();
            let head = g.terms.remove(0);
            let tail = self.reduce_with(g, &polys, &masks, &others, true);
            let mut terms = vec![head];
            terms.extend(tail.terms);
            basis.push(Vector { terms });
        }
        basis.sort_by(|a, b| self.cmp(&a.terms[0].0, &b.terms[0].0).reverse());
        Ok(basis)
    }

    fn spoly(&self, f: &Vector, g: &Vector, lcm: &Monomial) -> Vector {
        let mf = f.terms[0].0.mono.quotient_of(lcm);
        let mg = g.terms[0].0.mono.quotient_of(lcm);
        let fpart: Vec<(VTerm, Coeff)> = f.terms[1..]
            .iter()
            .map(|(t, c)| (VTerm { comp: t.comp, mono: t.mono.mul(&mf) }, *c))
            .collect();
        Vector { terms: self.sub_mul(&fpart, 1, &mg, &g.terms[1..]) }
    }

    /// Gebauer-Möller update of the pair set and basis after adding `polys[h]`.
    fn update(&self, polys: &[Vector], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize, seq: &mut u64) {
        let lth = &polys[h].terms[0].0;
        // candidate new pairs (h, g) with matching component
        let mut cands: Vec<(usize, Monomial, bool)> = active
            .iter()
            .filter(|&&g| polys[g].terms[0].0.comp == lth.comp)
            .map(|&g| {
                let ltg = &polys[g].terms[0].0.mono;
                (g, lth.mono.lcm(ltg), self.ideal_case && lth.mono.is_coprime(ltg))
            })
            .collect();
        // Gebauer-Möller: process candidates in order, keeping (h,g1) only if
        // it is coprime or no remaining/kept candidate has an lcm dividing its lcm
        let mut remaining: Vec<(usize, Monomial, bool)> = cands.drain(..).rev().collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some(cur) = remaining.pop() {
            let dominated = remaining.iter().chain(kept.iter()).any(|o| o.1.divides(&cur.1));
            if cur.2 || !dominated {
                kept.push(cur);
            }
        }
        let new_pairs: Vec<(usize, Monomial)> = kept.into_iter().filter(|c| !c.2).map(|(g, l, _)| (g, l)).collect();
        // prune old pairs (g1,g2) whose lcm is divisible by LT(h) strictly
        pairs.retain(|p| {
            if polys[p.i].terms[0].0.comp != lth.comp || !lth.mono.divides(&p.lcm) {
                return true;
            }
            let l1 = lth.mono.lcm(&polys[p.i].terms[0].0.mono);
            let l2 = lth.mono.lcm(&polys[p.j].terms[0].0.mono);
            l1 == p.lcm || l2 == p.lcm
        });
        for (g, l) in new_pairs {
            *seq += 1;
            pairs.push(Pair { i: g, j: h, lcm: l, seq: *seq });
        }
        active.retain(|&g| {
            let ltg = &polys[g].terms[0].0;
            !(ltg.comp == lth.comp && lth.mono.divides(&ltg.mono))
        });
        active.push(h);
    }
}
