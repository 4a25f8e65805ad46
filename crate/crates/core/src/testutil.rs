//! Independent oracles used by unit tests: dense linear algebra over
//! truncated polynomial spans and brute-force monomial ideal checks.

use std::collections::HashMap;

use crate::poly::{Coeff, Monomial, Polynomial, PolynomialRing};

/// All monomials in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial::from_exponents(prefix));
            prefix.pop();
            return;
        }
        for a in (0..=d).rev() {
            prefix.push(a);
            go(n, d - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    go(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    (0..=d).flat_map(|k| monomials_of_degree(n, k)).collect()
}

/// Row-echelon span of all products m*g with deg(m*g) <= max_degree.
/// Columns are ordered by the ring's monomial order, largest first, so
/// pivots are leading monomials.
pub struct DenseSpan {
    ring: PolynomialRing,
    cols: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    // pivot column -> normalized row
    rows: Vec<(usize, Vec<Coeff>)>,
}

impl DenseSpan {
    pub fn new(ring: &PolynomialRing, gens: &[Polynomial], max_degree: u32) -> Self {
        let n = ring.nvars();
        let order = ring.order();
        let mut cols = monomials_up_to(n, max_degree);
        cols.sort_by(|a, b| order.cmp(b, a));
        let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut span = DenseSpan { ring: ring.clone(), cols, index, rows: Vec::new() };
        for g in gens {
            let Some(dg) = g.terms().iter().map(|(m, _)| m.degree()).max() else { continue };
            if dg > max_degree {
                continue;
            }
            for m in monomials_up_to(n, max_degree - dg) {
                let v = span.dense(&g.mul_term(&m, 1));
                span.insert(v);
            }
        }
        span
    }

    fn dense(&self, f: &Polynomial) -> Vec<Coeff> {
        let mut v = vec![0; self.cols.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = *c;
        }
        v
    }

    fn reduce(&self, mut v: Vec<Coeff>) -> Vec<Coeff> {
        let field = self.ring.field();
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a = field.sub(*a, field.mul(c, *b));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<Coeff>) {
        let field = *self.ring.field();
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&c| c != 0) else { return };
        let inv = field.inv(v[piv]).unwrap();
        for a in v.iter_mut() {
            *a = field.mul(*a, inv);
        }
        // keep rows fully reduced so the pivot order does not matter
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (a, b) in row.iter_mut().zip(&v) {
                    *a = field.sub(*a, field.mul(c, *b));
                }
            }
        }
        self.rows.push((piv, v));
        self.rows.sort_by_key(|r| r.0);
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        if f.terms().iter().any(|(m, _)| !self.index.contains_key(m)) {
            return false;
        }
        self.reduce(self.dense(f)).iter().all(|&c| c == 0)
    }

    /// Normal form modulo the span: the unique representative with no
    /// pivot monomials.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let v = self.reduce(self.dense(f));
        let terms = v.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| (self.cols[i].clone(), *c)).collect();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.rows.iter().map(|(p, _)| self.cols[*p].clone()).collect()
    }

    /// Minimal generators of the monomial ideal spanned by the pivots.
    pub fn minimal_leading_monomials(&self) -> Vec<Monomial> {
        let lts = self.leading_monomials();
        let mut out: Vec<Monomial> = lts
            .iter()
            .filter(|m| !lts.iter().any(|o| o != *m && o.divides(m)))
            .cloned()
            .collect();
        out.sort_by(|a, b| self.ring.order().cmp(b, a));
        out
    }

    /// Number of monomials of degree `d` that are not pivots.
    pub fn quotient_dim_in_degree(&self, d: u32) -> usize {
        let total = self.cols.iter().filter(|m| m.degree() == d).count();
        let pivots = self.rows.iter().filter(|(p, _)| self.cols[*p].degree() == d).count();
        total - pivots
    }
}

/// Vector-space dimension of S/I for a homogeneous ideal, summing the
/// graded pieces through `max_degree`; None if degree `max_degree` is not
/// already zero in the quotient.
pub fn graded_colength(ring: &PolynomialRing, gens: &[Polynomial], max_degree: u32) -> Option<usize> {
    let span = DenseSpan::new(ring, gens, max_degree);
    if span.quotient_dim_in_degree(max_degree) != 0 {
        return None;
    }
    Some((0..=max_degree).map(|d| span.quotient_dim_in_degree(d)).sum())
}

/// Hilbert function of S/I in degrees 0..=max_degree for homogeneous I.
pub fn graded_hilbert(ring: &PolynomialRing, gens: &[Polynomial], max_degree: u32) -> Vec<u64> {
    let span = DenseSpan::new(ring, gens, max_degree);
    (0..=max_degree).map(|d| span.quotient_dim_in_degree(d) as u64).collect()
}

/// Membership of a monomial in a monomial ideal by exponent comparison.
pub fn monomial_in(m: &[u32], gens: &[Vec<u32>]) -> bool {
    gens.iter().any(|g| g.iter().zip(m).all(|(a, b)| a <= b))
}

pub fn poly_from_exps(ring: &PolynomialRing, exps: &[u32]) -> Polynomial {
    Polynomial::monomial(ring, Monomial::from_exponents(exps), 1)
}

/// Monomial ideals as minimal exponent-vector generator sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoIdeal {
    pub n: usize,
    pub gens: Vec<Vec<u32>>,
}

impl MonoIdeal {
    pub fn new(n: usize, gens: Vec<Vec<u32>>) -> Self {
        let mut g: Vec<Vec<u32>> = Vec::new();
        for a in &gens {
            if !gens.iter().any(|b| b != a && b.iter().zip(a).all(|(x, y)| x <= y)) && !g.contains(a) {
                g.push(a.clone());
            }
        }
        g.sort();
        MonoIdeal { n, gens: g }
    }

    pub fn intersect(&self, other: &MonoIdeal) -> MonoIdeal {
        let mut out = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
            }
        }
        MonoIdeal::new(self.n, out)
    }

    pub fn product(&self, other: &MonoIdeal) -> MonoIdeal {
        let mut out = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                out.push(a.iter().zip(b).map(|(x, y)| x + y).collect());
            }
        }
        MonoIdeal::new(self.n, out)
    }

    pub fn colon_mono(&self, m: &[u32]) -> MonoIdeal {
        let out = self.gens.iter().map(|g| g.iter().zip(m).map(|(x, y)| x.saturating_sub(*y)).collect()).collect();
        MonoIdeal::new(self.n, out)
    }

    pub fn colon_ideal(&self, other: &MonoIdeal) -> MonoIdeal {
        let mut acc: Option<MonoIdeal> = None;
        for g in &other.gens {
            let c = self.colon_mono(g);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c),
            });
        }
        acc.expect("nonzero ideal")
    }

    pub fn saturate(&self, other: &MonoIdeal) -> MonoIdeal {
        let mut cur = self.clone();
        loop {
            let next = cur.colon_ideal(other);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn to_ideal(&self, ring: &PolynomialRing) -> crate::groebner::Ideal {
        crate::groebner::Ideal::new(ring, self.gens.iter().map(|g| poly_from_exps(ring, g)).collect()).unwrap()
    }

    pub fn from_leading(lts: &[Monomial], n: usize) -> MonoIdeal {
        MonoIdeal::new(n, lts.iter().map(|m| m.exponents().to_vec()).collect())
    }
}

/// Independent F_p rank of a list of polynomials (as coefficient vectors).
pub fn rank(ring: &PolynomialRing, polys: &[Polynomial]) -> usize {
    let field = ring.field();
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    for f in polys {
        for (m, _) in f.terms() {
            let k = index.len();
            index.entry(m.clone()).or_insert(k);
        }
    }
    let width = index.len();
    let mut rows: Vec<Vec<Coeff>> = polys
        .iter()
        .map(|f| {
            let mut v = vec![0; width];
            for (m, c) in f.terms() {
                v[index[m]] = *c;
            }
            v
        })
        .collect();
    let mut r = 0;
    for col in 0..width {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][col]).unwrap();
        let pivot: Vec<Coeff> = rows[r].iter().map(|&c| field.mul(c, inv)).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = row[col];
                for (a, b) in row.iter_mut().zip(&pivot) {
                    *a = field.sub(*a, field.mul(c, *b));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// Dimension of the degree-`d` piece of `(I : f)` for homogeneous `I` and `f`,
/// by linear algebra on the degree `d + deg f` piece of `I`.
pub fn graded_colon_dim(ring: &PolynomialRing, gens: &[Polynomial], f: &Polynomial, d: u32) -> usize {
    let df = f.degree().unwrap();
    let span = DenseSpan::new(ring, gens, d + df);
    let images: Vec<Polynomial> =
        monomials_of_degree(ring.nvars(), d).iter().map(|m| span.normal_form(&f.mul_term(m, 1))).collect();
    monomials_of_degree(ring.nvars(), d).len() - rank(ring, &images)
}

/// Dimension of `(S/I)_d` for homogeneous generators, from the rank of the
/// products landing in degree `d`.
pub fn graded_piece_dim(ring: &PolynomialRing, gens: &[Polynomial], d: u32) -> usize {
    let n = ring.nvars();
    let mut products = Vec::new();
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg <= d {
            products.extend(monomials_of_degree(n, d - dg).iter().map(|m| g.mul_term(m, 1)));
        }
    }
    monomials_of_degree(n, d).len() - rank(ring, &products)
}

/// `λ(S/I)` for homogeneous I primary to the maximal ideal, one degree at a
/// time until a graded piece vanishes.
pub fn graded_colength_by_degree(ring: &PolynomialRing, gens: &[Polynomial]) -> u64 {
    let mut total = 0;
    for d in 0.. {
        let k = graded_piece_dim(ring, gens, d);
        if k == 0 {
            break;
        }
        total += k as u64;
    }
    total
}
