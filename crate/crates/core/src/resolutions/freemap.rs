use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::poly::{Polynomial, PolynomialRing};

/// A map of free modules `S^cols -> S^rows`, stored by columns (the images
/// of the source basis). Basis elements carry integer degrees; column
/// degrees are inferred from the entries when the map is homogeneous.
#[derive(Clone, PartialEq, Eq)]
pub struct FreeMap {
    ring: PolynomialRing,
    nrows: usize,
    cols: Vec<Vec<Polynomial>>,
    row_degrees: Vec<i64>,
    col_degrees: Vec<i64>,
}

impl fmt::Debug for FreeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FreeMap {}x{}", self.nrows, self.cols.len())?;
        for i in 0..self.nrows {
            let row: Vec<String> = self.cols.iter().map(|c| c[i].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn infer_degree(col: &[Polynomial], row_degrees: &[i64]) -> i64 {
    col.iter()
        .zip(row_degrees)
        .find(|(p, _)| !p.is_zero())
        .map(|(p, d)| p.degree().unwrap() as i64 + d)
        .unwrap_or(0)
}

impl FreeMap {
    /// Column-major constructor with generator degrees 0 in the target.
    pub fn from_columns(ring: &PolynomialRing, nrows: usize, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        Self::with_row_degrees(ring, vec![0; nrows], cols)
    }

    pub fn with_row_degrees(ring: &PolynomialRing, row_degrees: Vec<i64>, cols: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = row_degrees.len();
        for c in &cols {
            if c.len() != nrows {
                return Err(AlgebraError::DimensionMismatch(format!("column of length {} in a map with {nrows} rows", c.len())));
            }
            for p in c {
                ring.check_same(p.ring())?;
            }
        }
        let col_degrees = cols.iter().map(|c| infer_degree(c, &row_degrees)).collect();
        Ok(FreeMap { ring: ring.clone(), nrows, cols, row_degrees, col_degrees })
    }

    pub(crate) fn with_degrees(
        ring: &PolynomialRing,
        row_degrees: Vec<i64>,
        cols: Vec<Vec<Polynomial>>,
        col_degrees: Vec<i64>,
    ) -> Self {
        FreeMap { ring: ring.clone(), nrows: row_degrees.len(), cols, row_degrees, col_degrees }
    }

    pub fn from_rows(ring: &PolynomialRing, rows: Vec<Vec<Polynomial>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(AlgebraError::DimensionMismatch("ragged matrix rows".into()));
        }
        let cols = (0..ncols).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
        Self::from_columns(ring, nrows, cols)
    }

    pub fn zero(ring: &PolynomialRing, nrows: usize, ncols: usize) -> Self {
        FreeMap::with_degrees(ring, vec![0; nrows], vec![vec![ring.zero(); nrows]; ncols], vec![0; ncols])
    }

    pub fn identity(ring: &PolynomialRing, n: usize) -> Self {
        Self::scalar(ring, n, &ring.one())
    }

    /// `f` times the identity of `S^n`.
    pub fn scalar(ring: &PolynomialRing, n: usize, f: &Polynomial) -> Self {
        let cols = (0..n).map(|j| (0..n).map(|i| if i == j { f.clone() } else { ring.zero() }).collect()).collect();
        FreeMap::from_columns(ring, n, cols).expect("square")
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn columns(&self) -> &[Vec<Polynomial>] {
        &self.cols
    }

    pub fn column(&self, j: usize) -> &[Polynomial] {
        &self.cols[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.cols[j][i]
    }

    pub fn row_degrees(&self) -> &[i64] {
        &self.row_degrees
    }

    pub fn col_degrees(&self) -> &[i64] {
        &self.col_degrees
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.iter().all(|p| p.is_zero()))
    }

    /// Every entry is homogeneous of the degree its position demands.
    pub fn is_homogeneous(&self) -> bool {
        self.cols.iter().zip(&self.col_degrees).all(|(c, &cd)| {
            c.iter().zip(&self.row_degrees).all(|(p, &rd)| {
                p.is_zero() || (p.is_homogeneous() && p.degree().unwrap() as i64 + rd == cd)
            })
        })
    }

    /// `self(v)` for `v` in the source.
    pub fn apply(&self, v: &[Polynomial]) -> Result<Vec<Polynomial>> {
        if v.len() != self.ncols() {
            return Err(AlgebraError::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.ncols())));
        }
        let mut out = vec![self.ring.zero(); self.nrows];
        for (c, a) in self.cols.iter().zip(v) {
            if a.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(c) {
                if !e.is_zero() {
                    *o = o.add(&e.mul(a)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &FreeMap) -> Result<FreeMap> {
        if other.nrows != self.ncols() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.nrows,
                self.ncols(),
                other.nrows,
                other.ncols()
            )));
        }
        let cols = other.cols.iter().map(|c| self.apply(c)).collect::<Result<Vec<_>>>()?;
        Ok(FreeMap::with_degrees(&self.ring, self.row_degrees.clone(), cols, other.col_degrees.clone()))
    }

    pub fn transpose(&self) -> FreeMap {
        let cols = (0..self.nrows).map(|i| self.cols.iter().map(|c| c[i].clone()).collect()).collect();
        FreeMap::with_degrees(&self.ring, self.col_degrees.clone(), cols, self.row_degrees.clone())
    }

    /// The dual map `Hom(-, S)`: transpose with negated degrees.
    pub fn dual(&self) -> FreeMap {
        let mut t = self.transpose();
        t.row_degrees.iter_mut().for_each(|d| *d = -*d);
        t.col_degrees.iter_mut().for_each(|d| *d = -*d);
        t
    }

    /// `[self | other]`, both with the same target.
    pub fn hconcat(&self, other: &FreeMap) -> Result<FreeMap> {
        if self.nrows != other.nrows {
            return Err(AlgebraError::DimensionMismatch("hconcat of maps with different targets".into()));
        }
        let mut cols = self.cols.clone();
        cols.extend(other.cols.iter().cloned());
        let mut cd = self.col_degrees.clone();
        cd.extend(other.col_degrees.iter().copied());
        Ok(FreeMap::with_degrees(&self.ring, self.row_degrees.clone(), cols, cd))
    }

    /// Block diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &FreeMap) -> FreeMap {
        let z = self.ring.zero();
        let mut cols = Vec::with_capacity(self.ncols() + other.ncols());
        for c in &self.cols {
            let mut v = c.clone();
            v.extend(std::iter::repeat_n(z.clone(), other.nrows));
            cols.push(v);
        }
        for c in &other.cols {
            let mut v = vec![z.clone(); self.nrows];
            v.extend(c.iter().cloned());
            cols.push(v);
        }
        let mut rd = self.row_degrees.clone();
        rd.extend(other.row_degrees.iter().copied());
        let mut cd = self.col_degrees.clone();
        cd.extend(other.col_degrees.iter().copied());
        FreeMap::with_degrees(&self.ring, rd, cols, cd)
    }

    /// `n` copies of `self` on the diagonal.
    pub fn repeat_diagonal(&self, n: usize) -> FreeMap {
        let mut acc = FreeMap::with_degrees(&self.ring, Vec::new(), Vec::new(), Vec::new());
        for _ in 0..n {
            acc = acc.direct_sum(self);
        }
        acc
    }

    pub fn select_columns(&self, keep: &[usize]) -> FreeMap {
        FreeMap::with_degrees(
            &self.ring,
            self.row_degrees.clone(),
            keep.iter().map(|&j| self.cols[j].clone()).collect(),
            keep.iter().map(|&j| self.col_degrees[j]).collect(),
        )
    }

    /// Restricts every column to the first `k` rows.
    pub fn top_rows(&self, k: usize) -> FreeMap {
        FreeMap::with_degrees(
            &self.ring,
            self.row_degrees[..k].to_vec(),
            self.cols.iter().map(|c| c[..k].to_vec()).collect(),
            self.col_degrees.clone(),
        )
    }

    pub fn drop_zero_columns(&self) -> FreeMap {
        let keep: Vec<usize> = (0..self.ncols()).filter(|&j| self.cols[j].iter().any(|p| !p.is_zero())).collect();
        self.select_columns(&keep)
    }

    /// Overrides the source degrees, for maps whose zero columns would
    /// otherwise get degree 0.
    pub(crate) fn with_col_degrees(mut self, cd: Vec<i64>) -> FreeMap {
        debug_assert_eq!(cd.len(), self.cols.len());
        self.col_degrees = cd;
        self
    }

    pub(crate) fn set_row_degrees(&mut self, rd: Vec<i64>) {
        debug_assert_eq!(rd.len(), self.nrows);
        self.col_degrees = self.cols.iter().map(|c| infer_degree(c, &rd)).collect();
        self.row_degrees = rd;
    }

    /// Position of a nonzero constant entry, if any.
    pub(crate) fn find_unit(&self) -> Option<(usize, usize)> {
        for (j, c) in self.cols.iter().enumerate() {
            for (i, p) in c.iter().enumerate() {
                if !p.is_zero() && p.is_unit() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Cancels the unit at `(i, j)`: clears row `i` with column operations
    /// and drops row `i` and column `j`. Returns the coefficients used, so
    /// callers can update adjacent maps.
    pub(crate) fn cancel_unit(&self, i: usize, j: usize) -> Result<(FreeMap, Vec<Polynomial>)> {
        let field = self.ring.field();
        let c = self.cols[j][i].constant_value().expect("unit entry");
        let cinv = field.inv(c)?;
        let mut factors = Vec::with_capacity(self.ncols());
        let mut cols = Vec::with_capacity(self.ncols() - 1);
        let mut cd = Vec::with_capacity(self.ncols() - 1);
        for (l, col) in self.cols.iter().enumerate() {
            let f = col[i].scale(cinv);
            factors.push(f.clone());
            if l == j {
                continue;
            }
            let mut v = Vec::with_capacity(self.nrows - 1);
            for (m, e) in col.iter().enumerate() {
                if m == i {
                    continue;
                }
                let a = &self.cols[j][m];
                v.push(if f.is_zero() || a.is_zero() { e.clone() } else { e.sub(&f.mul(a)?)? });
            }
            cols.push(v);
            cd.push(self.col_degrees[l]);
        }
        let mut rd = self.row_degrees.clone();
        rd.remove(i);
        Ok((FreeMap::with_degrees(&self.ring, rd, cols, cd), factors))
    }
}
