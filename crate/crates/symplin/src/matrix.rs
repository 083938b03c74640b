//! Dense matrices over exact rationals.
//!
//! Vectors are rows; a subspace is the row space of a matrix. Linear maps
//! handed in by callers use the column convention `x ↦ f·x`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::LinError;

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Q, LinError> {
    let t = s.trim();
    let bad = || LinError::Parse(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Q>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { cols, rows: vec![vec![Q::zero(); cols]; rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Q::one();
        }
        m
    }

    /// A matrix with the given rows, each of length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Q>>) -> Result<Self, LinError> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinError::Shape(format!("row of length {} in a matrix with {cols} columns", r.len())));
        }
        Ok(Matrix { cols, rows })
    }

    /// Integer entries; every row must have length `cols`.
    pub fn from_ints(cols: usize, rows: &[&[i64]]) -> Self {
        let rows = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        Self::from_rows(cols, rows).expect("ragged integer matrix")
    }

    /// Entries given as `"p/q"` strings.
    pub fn parse(cols: usize, rows: &[Vec<String>]) -> Result<Self, LinError> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(cols, rows)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Q>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.rows[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Q) {
        self.rows[i][j] = x;
    }

    pub fn push_row(&mut self, row: Vec<Q>) {
        assert_eq!(row.len(), self.cols, "row length");
        self.rows.push(row);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.iter().all(Zero::is_zero))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                t.rows[j][i] = x.clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.nrows(), "inner dimensions");
        let mut out = Self::zeros(self.nrows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for (k, a) in r.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        out.rows[i][j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Matrix { cols: self.cols, rows: self.rows.iter().map(|r| r.iter().map(|x| -x).collect()).collect() }
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.nrows(), "vector length");
        let mut out = vec![Q::zero(); self.cols];
        for (a, r) in v.iter().zip(&self.rows) {
            if a.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(r) {
                *o += a * b;
            }
        }
        out
    }

    /// `self` above `other`.
    pub fn vstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.cols, other.cols, "column counts");
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Matrix { cols: self.cols, rows }
    }

    /// `self` beside `other`.
    pub fn hstack(&self, other: &Matrix) -> Self {
        assert_eq!(self.nrows(), other.nrows(), "row counts");
        let rows = self.rows.iter().zip(&other.rows).map(|(a, b)| a.iter().chain(b).cloned().collect()).collect();
        Matrix { cols: self.cols + other.cols, rows }
    }

    pub fn block_diag(&self, other: &Matrix) -> Self {
        let top = self.hstack(&Self::zeros(self.nrows(), other.cols));
        let bottom = Self::zeros(other.nrows(), self.cols).hstack(other);
        top.vstack(&bottom)
    }

    /// The columns in `range`, in order.
    pub fn columns(&self, range: std::ops::Range<usize>) -> Self {
        Matrix { cols: range.len(), rows: self.rows.iter().map(|r| r[range.clone()].to_vec()).collect() }
    }

    /// Reduced row echelon form with zero rows dropped, and the pivot
    /// columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.len() {
                break;
            }
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(p, r);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        (Matrix { cols: self.cols, rows: m }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows spanning `{v : self·vᵀ = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut out = Matrix::zeros(0, self.cols);
        for f in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Q::zero(); self.cols];
            v[f] = Q::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.rows[i][f].clone();
            }
            out.rows.push(v);
        }
        out
    }

    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.cols;
        if self.nrows() != n {
            return None;
        }
        let (r, pivots) = self.hstack(&Self::identity(n)).rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        Some(r.columns(n..2 * n))
    }

    pub fn is_antisymmetric(&self) -> bool {
        *self == self.transpose().neg()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        if self.rows.is_empty() {
            write!(f, "[] (0×{})", self.cols)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_parse_reduced() {
        assert_eq!(parse_rational("6/4").unwrap(), Q::new(3.into(), 2.into()));
        assert_eq!(parse_rational("-3").unwrap(), q(-3));
        assert_eq!(parse_rational("2/-4").unwrap().to_string(), "-1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rref_is_canonical_for_a_row_space() {
        let a = Matrix::from_ints(3, &[&[1, 2, 3], &[2, 4, 7]]);
        let b = Matrix::from_ints(3, &[&[3, 6, 10], &[0, 0, 5], &[1, 2, 3]]);
        assert_eq!(a.rref().0, b.rref().0);
        assert_eq!(a.rref().1, vec![0, 2]);
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = Matrix::from_ints(4, &[&[1, 2, 0, -1], &[0, 1, 1, 1]]);
        let n = a.nullspace();
        assert_eq!(n.nrows(), 2);
        assert!(a.mul(&n.transpose()).is_zero());
    }

    #[test]
    fn inverse_round_trips() {
        let a = Matrix::from_ints(3, &[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert!(Matrix::from_ints(2, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn stacking_and_blocks() {
        let a = Matrix::identity(1);
        let b = Matrix::from_ints(2, &[&[0, 1], &[-1, 0]]);
        let d = a.block_diag(&b);
        assert_eq!(d.nrows(), 3);
        assert_eq!(*d.get(1, 2), q(1));
        assert!(d.get(0, 1).is_zero());
        assert_eq!(Matrix::zeros(0, 0).block_diag(&b), b);
        assert!(b.is_antisymmetric());
    }
}
