//! Generator triples `(D, R, L)`: diagonal, raising and lowering matrices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Scalar};
use crate::rational::{fmt_rational, Rational};

/// How the ladder entries are stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Flavor {
    /// Raising entries `t_q`, lowering entries `1`; exact and non-unitary.
    VermaExact,
    /// Raising and lowering both `sqrt(t_q)`, as `f64`.
    UnitaryNumeric,
}

/// A realization of `[D, R] = R`, `[D, L] = -L`, `[R, L] = f(D)` on a finite space.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorTriple<T> {
    pub d: Matrix<T>,
    pub r: Matrix<T>,
    pub l: Matrix<T>,
}

impl<T: Scalar> GeneratorTriple<T> {
    pub fn new(d: Matrix<T>, r: Matrix<T>, l: Matrix<T>) -> Result<Self> {
        if d.dim() != r.dim() || d.dim() != l.dim() {
            return Err(Error::DimensionMismatch(format!(
                "D is {0}x{0}, R is {1}x{1}, L is {2}x{2}",
                d.dim(),
                r.dim(),
                l.dim()
            )));
        }
        Ok(GeneratorTriple { d, r, l })
    }

    pub fn dim(&self) -> usize {
        self.d.dim()
    }

    pub fn restrict(&self, indices: &[usize]) -> Result<Self> {
        GeneratorTriple::new(
            self.d.restrict(indices)?,
            self.r.restrict(indices)?,
            self.l.restrict(indices)?,
        )
    }

    /// `X ⊗ 1` for every generator.
    pub fn embed_left(&self, right_dim: usize) -> Self {
        let id = Matrix::identity(right_dim);
        GeneratorTriple { d: self.d.kron(&id), r: self.r.kron(&id), l: self.l.kron(&id) }
    }

    /// `1 ⊗ X` for every generator.
    pub fn embed_right(&self, left_dim: usize) -> Self {
        let id = Matrix::identity(left_dim);
        GeneratorTriple { d: id.kron(&self.d), r: id.kron(&self.r), l: id.kron(&self.l) }
    }

    /// The trivial one-dimensional triple `D = (value)`, `R = L = 0`.
    pub fn trivial(value: T) -> Self {
        GeneratorTriple {
            d: Matrix::from_diagonal(vec![value]),
            r: Matrix::zeros(1),
            l: Matrix::zeros(1),
        }
    }
}

impl GeneratorTriple<Rational> {
    pub fn to_f64(&self) -> GeneratorTriple<f64> {
        let conv = |m: &Matrix<Rational>| m.map(crate::rational::to_f64);
        GeneratorTriple { d: conv(&self.d), r: conv(&self.r), l: conv(&self.l) }
    }
}

/// Dense JSON form of a triple.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TripleExport {
    pub flavor: Flavor,
    pub dim: usize,
    #[serde(rename = "D")]
    pub d: Vec<Vec<String>>,
    #[serde(rename = "R")]
    pub r: Vec<Vec<String>>,
    #[serde(rename = "L")]
    pub l: Vec<Vec<String>>,
}

fn dense_strings<T: Scalar>(m: &Matrix<T>, f: impl Fn(&T) -> String) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|row| row.iter().map(&f).collect()).collect()
}

impl From<&GeneratorTriple<Rational>> for TripleExport {
    fn from(t: &GeneratorTriple<Rational>) -> Self {
        TripleExport {
            flavor: Flavor::VermaExact,
            dim: t.dim(),
            d: dense_strings(&t.d, fmt_rational),
            r: dense_strings(&t.r, fmt_rational),
            l: dense_strings(&t.l, fmt_rational),
        }
    }
}

impl From<&GeneratorTriple<f64>> for TripleExport {
    fn from(t: &GeneratorTriple<f64>) -> Self {
        let fmt = |v: &f64| format!("{v:?}");
        TripleExport {
            flavor: Flavor::UnitaryNumeric,
            dim: t.dim(),
            d: dense_strings(&t.d, fmt),
            r: dense_strings(&t.r, fmt),
            l: dense_strings(&t.l, fmt),
        }
    }
}
