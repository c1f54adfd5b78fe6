//! Sparse square matrices that remember where a Fock cutoff cut them off.
//!
//! Every matrix carries a set of *truncated* columns: basis states on which the
//! stored action is incomplete because a creation operator hit the occupation
//! cutoff. Products and sums propagate the set, so any relation can be checked
//! exactly on the columns where it is meaningful and skipped elsewhere.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{to_f64, Rational};

/// Entry type of a [`Matrix`]: exact rationals or `f64`.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    const EXACT: bool;
    fn from_rational(r: &Rational) -> Self;
    fn magnitude(&self) -> f64;
}

impl Scalar for Rational {
    const EXACT: bool = true;
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn magnitude(&self) -> f64 {
        to_f64(self).abs()
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;
    fn from_rational(r: &Rational) -> Self {
        to_f64(r)
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    dim: usize,
    /// Row-major, each row sorted by column, no explicit zeros.
    rows: Vec<Vec<(usize, T)>>,
    truncated: BTreeSet<usize>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Matrix { dim, rows: vec![Vec::new(); dim], truncated: BTreeSet::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Matrix::from_diagonal((0..dim).map(|_| T::one()).collect())
    }

    pub fn from_diagonal(diag: Vec<T>) -> Self {
        let dim = diag.len();
        let rows = diag
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
            .collect();
        Matrix { dim, rows, truncated: BTreeSet::new() }
    }

    /// Builds from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (usize, usize, T)>) -> Self {
        let mut acc: Vec<BTreeMap<usize, T>> = vec![BTreeMap::new(); dim];
        for (i, j, v) in entries {
            assert!(i < dim && j < dim, "entry ({i}, {j}) outside {dim}x{dim}");
            let slot = acc[i].entry(j).or_insert_with(T::zero);
            *slot = slot.clone() + v;
        }
        Matrix { dim, rows: compact(acc), truncated: BTreeSet::new() }
    }

    pub fn from_dense(rows: Vec<Vec<T>>) -> Self {
        let dim = rows.len();
        let entries = rows.into_iter().enumerate().flat_map(move |(i, row)| {
            assert_eq!(row.len(), dim, "dense matrix must be square");
            row.into_iter().enumerate().map(move |(j, v)| (i, j, v))
        });
        Matrix::from_entries(dim, entries)
    }

    pub fn with_truncated(mut self, cols: impl IntoIterator<Item = usize>) -> Self {
        self.truncated.extend(cols);
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn truncated(&self) -> &BTreeSet<usize> {
        &self.truncated
    }

    pub fn is_truncated(&self, col: usize) -> bool {
        self.truncated.contains(&col)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.rows[i]
            .binary_search_by_key(&j, |(c, _)| *c)
            .map(|k| self.rows[i][k].1.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.rows[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.entries().all(|(i, j, _)| i == j)
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.dim]; self.dim];
        for (i, j, v) in self.entries() {
            out[i][j] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let entries: Vec<_> = self.entries().map(|(i, j, v)| (j, i, v.clone())).collect();
        Matrix::from_entries(self.dim, entries)
    }

    pub fn scale(&self, s: &T) -> Self {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(j, v)| (*j, v.clone() * s.clone()))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Matrix { dim: self.dim, rows, truncated: self.truncated.clone() }
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        let entries: Vec<_> = self.entries().map(|(i, j, v)| (i, j, f(v))).collect();
        Matrix::from_entries(self.dim, entries).with_truncated(self.truncated.iter().copied())
    }

    fn check_dims(&self, other: &Self) {
        assert_eq!(self.dim, other.dim, "matrix dimension mismatch");
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `A ⊗ B`, with index `i * dim(B) + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let n = other.dim;
        let mut entries = Vec::with_capacity(self.nnz() * other.nnz());
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                entries.push((i * n + k, j * n + l, a.clone() * b.clone()));
            }
        }
        let mut truncated = BTreeSet::new();
        for &c in &self.truncated {
            truncated.extend((0..n).map(|l| c * n + l));
        }
        for &c in &other.truncated {
            truncated.extend((0..self.dim).map(|j| j * n + c));
        }
        Matrix::from_entries(self.dim * n, entries).with_truncated(truncated)
    }

    /// `p(self)` for a diagonal matrix, evaluated entrywise on the diagonal.
    pub fn poly_of_diagonal(&self, p: &Polynomial) -> Result<Self> {
        if !self.is_diagonal() {
            return Err(Error::NotDiagonal("polynomial argument".into()));
        }
        let coeffs: Vec<T> = p.coeffs().iter().map(T::from_rational).collect();
        let diag = self
            .diagonal()
            .into_iter()
            .map(|x| coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone()))
            .collect();
        Ok(Matrix::from_diagonal(diag).with_truncated(self.truncated.iter().copied()))
    }

    /// Compresses to the basis states `indices` (in the given order).
    ///
    /// Fails when a non-truncated column in `indices` has weight on a state
    /// outside `indices`.
    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        let mut position = vec![None; self.dim];
        for (new, &old) in indices.iter().enumerate() {
            position[old] = Some(new);
        }
        let mut entries = Vec::new();
        for (i, j, v) in self.entries() {
            let Some(nj) = position[j] else { continue };
            match position[i] {
                Some(ni) => entries.push((ni, nj, v.clone())),
                None if self.truncated.contains(&j) => {}
                None => return Err(Error::NotSectorOperator { state: j }),
            }
        }
        let truncated: Vec<usize> = indices
            .iter()
            .enumerate()
            .filter(|(_, old)| self.truncated.contains(old))
            .map(|(new, _)| new)
            .collect();
        Ok(Matrix::from_entries(indices.len(), entries).with_truncated(truncated))
    }

    /// Largest entry magnitude over non-truncated columns, with the number of
    /// such columns.
    pub fn residual(&self) -> Residual {
        let checked = self.dim - self.truncated.len();
        let mut max = 0.0f64;
        let mut exact_zero = true;
        for (_, j, v) in self.entries() {
            if self.truncated.contains(&j) {
                continue;
            }
            exact_zero = false;
            max = max.max(v.magnitude());
        }
        Residual { exact: T::EXACT, exact_zero, max_abs: max, checked_columns: checked }
    }
}

/// Outcome of testing a matrix for vanishing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub exact: bool,
    pub exact_zero: bool,
    pub max_abs: f64,
    pub checked_columns: usize,
}

impl Residual {
    /// Zero exactly (exact flavor) or within `tolerance` (numeric flavor).
    pub fn within(&self, tolerance: f64) -> bool {
        if self.exact {
            self.exact_zero
        } else {
            self.max_abs <= tolerance
        }
    }

    pub fn combine(self, other: Residual) -> Residual {
        Residual {
            exact: self.exact && other.exact,
            exact_zero: self.exact_zero && other.exact_zero,
            max_abs: self.max_abs.max(other.max_abs),
            checked_columns: self.checked_columns.min(other.checked_columns),
        }
    }

    pub fn describe(&self) -> String {
        if self.exact_zero {
            "0".into()
        } else {
            format!("{:e}", self.max_abs)
        }
    }
}

fn compact<T: Scalar>(acc: Vec<BTreeMap<usize, T>>) -> Vec<Vec<(usize, T)>> {
    acc.into_iter()
        .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        .collect()
}

fn merge<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>, negate_b: bool) -> Matrix<T> {
    a.check_dims(b);
    let rows = a
        .rows
        .iter()
        .zip(&b.rows)
        .map(|(ra, rb)| {
            let mut out = Vec::with_capacity(ra.len() + rb.len());
            let (mut i, mut j) = (0, 0);
            while i < ra.len() || j < rb.len() {
                let take_a = j >= rb.len() || (i < ra.len() && ra[i].0 < rb[j].0);
                let take_b = i >= ra.len() || (j < rb.len() && rb[j].0 < ra[i].0);
                let bval = |v: &T| if negate_b { -v.clone() } else { v.clone() };
                if take_a {
                    out.push(ra[i].clone());
                    i += 1;
                } else if take_b {
                    out.push((rb[j].0, bval(&rb[j].1)));
                    j += 1;
                } else {
                    let v = ra[i].1.clone() + bval(&rb[j].1);
                    if !v.is_zero() {
                        out.push((ra[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            out
        })
        .collect();
    let truncated = a.truncated.union(&b.truncated).copied().collect();
    Matrix { dim: a.dim, rows, truncated }
}

impl<T: Scalar> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        merge(self, rhs, false)
    }
}

impl<T: Scalar> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        merge(self, rhs, true)
    }
}

impl<T: Scalar> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.check_dims(rhs);
        let mut rows = Vec::with_capacity(self.dim);
        let mut acc: BTreeMap<usize, T> = BTreeMap::new();
        for row in &self.rows {
            acc.clear();
            for (k, a) in row {
                for (j, b) in &rhs.rows[*k] {
                    let slot = acc.entry(*j).or_insert_with(T::zero);
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
            rows.push(
                std::mem::take(&mut acc)
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .collect(),
            );
        }
        // Column j of AB is incomplete if B's is, or if B routes j through a
        // column of A that is.
        let mut truncated = rhs.truncated.clone();
        if !self.truncated.is_empty() {
            for (k, j, _) in rhs.entries() {
                if self.truncated.contains(&k) {
                    truncated.insert(j);
                }
            }
        }
        Matrix { dim: self.dim, rows, truncated }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_dense(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn product_and_commutator() {
        let a = m(&[&[0, 1], &[0, 0]]);
        let b = m(&[&[0, 0], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[1, 0], &[0, 0]]));
        assert_eq!(a.commutator(&b), m(&[&[1, 0], &[0, -1]]));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn truncation_propagates_through_products() {
        // "a†" on a 3-level space, truncated at the top state.
        let up = Matrix::from_entries(3, [(1, 0, int(1)), (2, 1, int(2))]).with_truncated([2]);
        let down = Matrix::from_entries(3, [(0, 1, int(1)), (1, 2, int(1))]);
        let ud = &up * &down;
        // a a† never reaches the missing |3>, so a† a stays complete.
        assert!(ud.truncated().is_empty());
        let du = &down * &up;
        assert!(du.is_truncated(2));
        let comm = down.commutator(&up);
        let r = (&comm - &Matrix::identity(3)).residual();
        assert!(r.exact_zero);
        assert_eq!(r.checked_columns, 2);
    }

    #[test]
    fn kron_layout() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let e = Matrix::<Rational>::identity(2);
        let k = a.kron(&e);
        assert_eq!(k.get(0, 2), int(2));
        assert_eq!(k.get(3, 1), int(3));
        assert_eq!(k.dim(), 4);
    }

    #[test]
    fn restriction_rejects_leaks() {
        let a = m(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        assert!(a.restrict(&[0, 1]).is_ok());
        assert_eq!(a.restrict(&[1, 2]), Err(Error::NotSectorOperator { state: 1 }));
        assert_eq!(Matrix::<Rational>::identity(3).restrict(&[0, 2]).unwrap(), Matrix::identity(2));
    }

    #[test]
    fn numeric_residual() {
        let a = Matrix::from_diagonal(vec![1e-14, -3e-13]);
        let r = a.residual();
        assert!(!r.exact);
        assert!(r.within(1e-12));
        assert!(!r.within(1e-13));
    }
}
