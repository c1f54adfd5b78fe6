//! Differential-operator realization of `Q(1,1)` on polynomials of degree at
//! most `2l - k`:
//!
//! `Q0 = z d/dz + k - l`, `Q+ = -z² d/dz + (2l - k)z`, `Q- = z d²/dz² + 2k d/dz`.
//!
//! In the basis `phi_n = z^n / sqrt(n! (n + 2k - 1)! (2l - k - n)!)` the matrix
//! elements are square roots of rationals; they are carried as [`Surd`]s so
//! the squared elements stay exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::catalog::q11::{q11_algebra_for, q11_casimir_value, q11_dimension, q11_irrep, q11_raising_squares};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::rational::{factorial, int, Rational, Surd};
use crate::report::EntryReport;
use crate::verify::Check;

/// `sum coef * z^z_pow * (d/dz)^d_pow`, kept with like terms merged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiffOp {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn term(coef: Rational, z_pow: u32, d_pow: u32) -> Self {
        DiffOp::zero().plus(coef, z_pow, d_pow)
    }

    pub fn identity() -> Self {
        DiffOp::term(Rational::one(), 0, 0)
    }

    /// Adds `coef z^z_pow d^d_pow`.
    pub fn plus(mut self, coef: Rational, z_pow: u32, d_pow: u32) -> Self {
        let slot = self.terms.entry((z_pow, d_pow)).or_insert_with(Rational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&(z_pow, d_pow));
        }
        self
    }

    /// `(coefficient, z_power, d_power)` in a fixed order.
    pub fn terms(&self) -> Vec<(Rational, u32, u32)> {
        self.terms.iter().map(|(&(z, d), c)| (c.clone(), z, d)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn apply(&self, p: &Polynomial) -> Polynomial {
        let mut out = vec![Rational::zero(); p.coeffs().len() + self.max_z_pow() as usize];
        for (&(z_pow, d_pow), c) in &self.terms {
            for (n, a) in p.coeffs().iter().enumerate() {
                let n = n as u32;
                if a.is_zero() || d_pow > n {
                    continue;
                }
                // d^q z^n = n!/(n-q)! z^(n-q)
                let falling = Rational::from_integer(factorial(n as u64) / factorial((n - d_pow) as u64));
                out[(n - d_pow + z_pow) as usize] += c * a * falling;
            }
        }
        Polynomial::new(out)
    }

    fn max_z_pow(&self) -> u32 {
        self.terms.keys().map(|&(z, _)| z).max().unwrap_or(0)
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        other.terms.iter().fold(self.clone(), |acc, (&(z, d), c)| acc.plus(c.clone(), z, d))
    }

    pub fn scale(&self, s: &Rational) -> DiffOp {
        self.terms.iter().fold(DiffOp::zero(), |acc, (&(z, d), c)| acc.plus(c * s, z, d))
    }

    /// `self ∘ other`, normal ordered with the Leibniz rule
    /// `d^q z^r = sum_i C(q, i) r!/(r - i)! z^(r - i) d^(q - i)`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        let mut out = DiffOp::zero();
        for (&(p, q), a) in &self.terms {
            for (&(r, s), b) in &other.terms {
                for i in 0..=q.min(r) {
                    let binom = Rational::from_integer(crate::rational::binomial(q as u64, i as u64));
                    let falling = Rational::from_integer(factorial(r as u64) / factorial((r - i) as u64));
                    out = out.plus(a * b * binom * falling, p + r - i, q - i + s);
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.compose(other).add(&other.compose(self).scale(&-Rational::one()))
    }

    /// `f(self)` by repeated composition.
    pub fn poly_of(&self, f: &Polynomial) -> DiffOp {
        let mut out = DiffOp::zero();
        let mut power = DiffOp::identity();
        for c in f.coeffs() {
            out = out.add(&power.scale(c));
            power = power.compose(self);
        }
        out
    }
}

impl fmt::Display for DiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(z, d), c)| {
                let z = match z {
                    0 => String::new(),
                    1 => " z".into(),
                    n => format!(" z^{n}"),
                };
                let d = match d {
                    0 => String::new(),
                    1 => " d".into(),
                    n => format!(" d^{n}"),
                };
                format!("({c}){z}{d}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The three operators at `(k, l)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BargmannTriple {
    pub q0: DiffOp,
    pub q_plus: DiffOp,
    pub q_minus: DiffOp,
}

pub fn bargmann_triple(k: &Rational, l: &Rational) -> Result<BargmannTriple> {
    q11_dimension(k, l)?;
    Ok(BargmannTriple {
        q0: DiffOp::term(Rational::one(), 1, 1).plus(k - l, 0, 0),
        q_plus: DiffOp::term(int(-1), 2, 1).plus(l * int(2) - k, 1, 0),
        q_minus: DiffOp::term(Rational::one(), 1, 2).plus(k * int(2), 0, 1),
    })
}

/// Formal norms `n! (n + 2k - 1)! (2l - k - n)!` of the monomials `z^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhiBasis {
    pub k: Rational,
    pub l: Rational,
    pub norms: Vec<Rational>,
}

impl PhiBasis {
    pub fn new(k: &Rational, l: &Rational) -> Result<Self> {
        let dim = q11_dimension(k, l)?;
        let top = dim as u64 - 1;
        let shift: u64 = (k * int(2) - int(1)).to_integer().try_into().expect("2k - 1 >= 0");
        let norms = (0..dim as u64)
            .map(|n| Rational::from_integer(factorial(n) * factorial(n + shift) * factorial(top - n)))
            .collect();
        Ok(PhiBasis { k: k.clone(), l: l.clone(), norms })
    }

    pub fn dim(&self) -> usize {
        self.norms.len()
    }

    pub fn monomial(n: usize) -> Polynomial {
        Polynomial::monomial(Rational::one(), n)
    }
}

/// A dense matrix of signed square roots.
#[derive(Debug, Clone, PartialEq)]
pub struct SurdMatrix {
    pub dim: usize,
    entries: BTreeMap<(usize, usize), Surd>,
}

impl SurdMatrix {
    pub fn get(&self, i: usize, j: usize) -> Surd {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(Surd::zero)
    }

    /// Entrywise signed squares, exact.
    pub fn squared(&self) -> Matrix<Rational> {
        Matrix::from_entries(self.dim, self.entries.iter().map(|(&(i, j), s)| (i, j, s.signed_square())))
    }

    pub fn to_f64(&self) -> Matrix<f64> {
        Matrix::from_entries(self.dim, self.entries.iter().map(|(&(i, j), s)| (i, j, s.to_f64())))
    }

    /// True when every entry is rational.
    pub fn is_rational(&self) -> bool {
        self.entries.values().all(|s| s.exact().is_some())
    }
}

/// The matrix of `op` in the normalized basis: `op phi_n = sum_m M_mn phi_m`
/// with `M_mn = c_mn sqrt(norm_m / norm_n)`, where `op z^n = sum_m c_mn z^m`.
pub fn matrix_in_phi_basis(op: &DiffOp, basis: &PhiBasis) -> Result<SurdMatrix> {
    let dim = basis.dim();
    let mut entries = BTreeMap::new();
    for n in 0..dim {
        let image = op.apply(&PhiBasis::monomial(n));
        if let Some(deg) = image.degree().filter(|&d| d >= dim) {
            return Err(Error::NotClosed(deg));
        }
        for (m, c) in image.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let ratio = &basis.norms[m] / &basis.norms[n];
                entries.insert((m, n), Surd::scaled_root(c, &ratio));
            }
        }
    }
    Ok(SurdMatrix { dim, entries })
}

/// Extensional equality on the monomials `z^0 .. z^top`.
fn agree_on_basis(a: &DiffOp, b: &DiffOp, dim: usize) -> bool {
    (0..dim).all(|n| {
        let z = PhiBasis::monomial(n);
        a.apply(&z) == b.apply(&z)
    })
}

/// Every check at one grid point.
pub fn bargmann_checks(k: &Rational, l: &Rational) -> Result<Vec<Check>> {
    let triple = bargmann_triple(k, l)?;
    let basis = PhiBasis::new(k, l)?;
    let dim = basis.dim();
    let m0 = matrix_in_phi_basis(&triple.q0, &basis)?;
    let mp = matrix_in_phi_basis(&triple.q_plus, &basis)?;
    let mm = matrix_in_phi_basis(&triple.q_minus, &basis)?;

    // Exact: diagonal and squared ladder entries against the closed form.
    let t = q11_raising_squares(k, l)?;
    let diag_ok = (0..dim).all(|n| m0.get(n, n).exact() == Some(k - l + int(n as i64)));
    let squares_ok = mp.squared()
        == Matrix::from_entries(dim, (1..dim).map(|q| (q, q - 1, t[q].clone())))
        && mm.squared() == Matrix::from_entries(dim, (1..dim).map(|q| (q - 1, q, t[q].clone())));
    let unitary = q11_irrep(k, l)?;
    let float_err = [(&m0, &unitary.d), (&mp, &unitary.r), (&mm, &unitary.l)]
        .iter()
        .map(|(s, u)| (&s.to_f64() - u).residual().max_abs)
        .fold(0.0, f64::max);

    let alg = q11_algebra_for(k, l);
    let comm = triple.q_plus.commutator(&triple.q_minus);
    let raise = agree_on_basis(&triple.q0.commutator(&triple.q_plus), &triple.q_plus, dim);
    let lower = agree_on_basis(&triple.q0.commutator(&triple.q_minus), &triple.q_minus.scale(&int(-1)), dim);
    let structure = agree_on_basis(&comm, &triple.q0.poly_of(&alg.f), dim);
    let casimir = triple.q_plus.compose(&triple.q_minus).add(&triple.q0.poly_of(&alg.casimir().h));
    let value = q11_casimir_value(k, l);
    let casimir_ok = agree_on_basis(&casimir, &DiffOp::identity().scale(&value), dim);

    Ok(vec![
        Check::from_bool("Q0 diagonal k-l+n", diag_ok, "0"),
        Check::from_bool("squared entries exact", squares_ok, "0"),
        Check::from_bool("float entries", float_err <= 1e-12, format!("{float_err:e}")),
        Check::from_bool("[Q0,Q+]=Q+", raise, "0"),
        Check::from_bool("[Q0,Q-]=-Q-", lower, "0"),
        Check::from_bool("[Q+,Q-]=f(Q0)", structure, "0"),
        Check::from_bool("casimir scalar", casimir_ok, "0").with_note(format!("value {value}")),
    ])
}

/// Runs [`bargmann_checks`] over the grid `2k <= max_twice_k`, `2l - k <= max_span`
/// and folds the results into one check per kind.
pub fn bargmann_report(max_twice_k: i64, max_span: i64) -> Result<EntryReport> {
    let grid = crate::catalog::q11::q11_grid(max_twice_k, max_span);
    let mut merged: Vec<Check> = Vec::new();
    for (k, l) in &grid {
        for check in bargmann_checks(k, l)? {
            match merged.iter_mut().find(|c| c.name == check.name) {
                Some(existing) if existing.passed() && !check.passed() => {
                    *existing = check.with_note(format!("first failure at (k, l) = ({k}, {l})"));
                }
                Some(existing) if check.name == "float entries" && existing.passed() => {
                    let worst = |c: &Check| c.residual.parse::<f64>().unwrap_or(0.0);
                    if worst(&check) > worst(existing) {
                        existing.residual = check.residual;
                    }
                }
                Some(_) => {}
                None => merged.push(Check { note: None, ..check }),
            }
        }
    }
    let mut report = EntryReport::new("bargmann")
        .constant("max_span", &int(max_span))
        .constant("max_twice_k", &int(max_twice_k));
    report.extend(merged);
    report.notes.push(format!("{} grid points", grid.len()));
    Ok(report)
}
