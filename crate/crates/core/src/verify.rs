//! Realization checks and the report types shared by every verifier.

use serde::Serialize;

use crate::algebra::PolyAlgebra;
use crate::error::Result;
use crate::matrix::{Matrix, Residual, Scalar};
use crate::triple::GeneratorTriple;

/// Default entrywise tolerance for the numeric (unitary) flavor.
pub const UNITARY_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DeviationDocumented,
    InsufficientPoints,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub residual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, status: Status, residual: impl Into<String>) -> Self {
        Check { name: name.into(), status, residual: residual.into(), note: None }
    }

    pub fn pass(name: impl Into<String>) -> Self {
        Check::new(name, Status::Pass, "0")
    }

    pub fn fail(name: impl Into<String>, why: impl Into<String>) -> Self {
        Check::new(name, Status::Fail, "n/a").with_note(why)
    }

    /// Pass/fail on a boolean, with a residual string for the record.
    pub fn from_bool(name: impl Into<String>, ok: bool, residual: impl Into<String>) -> Self {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, residual)
    }

    pub fn from_residual(name: impl Into<String>, r: Residual, tolerance: f64) -> Self {
        let status = if r.checked_columns == 0 {
            Status::InsufficientPoints
        } else if r.within(tolerance) {
            Status::Pass
        } else {
            Status::Fail
        };
        Check::new(name, status, r.describe())
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// A list of named checks; fails iff any check has status `Fail`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Checks the defining relations, the matrix Jacobi identity and Casimir
/// centrality of `gens` against `alg`.
///
/// Exact triples must vanish exactly; numeric ones within `tolerance`.
/// Columns flagged as truncated are excluded from every residual.
pub fn verify_realization<T: Scalar>(
    gens: &GeneratorTriple<T>,
    alg: &PolyAlgebra,
    tolerance: f64,
) -> Result<VerificationReport> {
    let GeneratorTriple { d, r, l } = gens;
    let mut report = VerificationReport::default();
    let check = |name: &str, m: Matrix<T>| Check::from_residual(name, m.residual(), tolerance);

    let dr = d.commutator(r);
    let dl = d.commutator(l);
    let rl = r.commutator(l);
    let f_d = d.poly_of_diagonal(&alg.f)?;

    report.push(check("[D,R]-R", &dr - r));
    report.push(check("[D,L]+L", &dl + l));
    report.push(check("[R,L]-f(D)", &rl - &f_d));

    let jacobi = &(&d.commutator(&rl) + &r.commutator(&l.commutator(d))) + &l.commutator(&dr);
    report.push(check("jacobi", jacobi));

    let casimir = alg.casimir().operator(gens)?;
    let centrality = [d, r, l]
        .iter()
        .map(|x| casimir.commutator(x).residual())
        .reduce(Residual::combine)
        .expect("three generators");
    report.push(Check::from_residual("casimir-centrality", centrality, tolerance));
    Ok(report)
}

/// `Some(c)` when `m` is `c` times the identity on its non-truncated columns.
pub fn scalar_value<T: Scalar>(m: &Matrix<T>) -> Option<T> {
    let cols: Vec<usize> = (0..m.dim()).filter(|j| !m.is_truncated(*j)).collect();
    let first = m.get(*cols.first()?, cols[0]);
    let shifted = m - &Matrix::identity(m.dim()).scale(&first);
    shifted.residual().exact_zero.then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_irrep_exact, build_irrep_unitary, su2_label};
    use crate::rational::{int, rat, Rational};

    #[test]
    fn built_irreps_verify() {
        let su2 = PolyAlgebra::su2();
        for twice_j in 0..8 {
            let label = su2_label(&rat(twice_j, 2));
            let exact = build_irrep_exact(&su2, &label).unwrap();
            assert!(verify_realization(&exact, &su2, 0.0).unwrap().all_pass());
            let unitary = build_irrep_unitary(&su2, &label).unwrap();
            assert!(verify_realization(&unitary, &su2, UNITARY_TOLERANCE).unwrap().all_pass());
        }
    }

    #[test]
    fn perturbation_is_detected() {
        let su2 = PolyAlgebra::su2();
        let mut triple = build_irrep_exact(&su2, &su2_label(&int(1))).unwrap();
        let bumped = triple.r.get(1, 0) + int(1);
        triple.r = &triple.r + &Matrix::from_entries(3, [(1, 0, int(1))]);
        assert_eq!(triple.r.get(1, 0), bumped);
        let report = verify_realization(&triple, &su2, 0.0).unwrap();
        assert_eq!(report.get("[R,L]-f(D)").unwrap().status, Status::Fail);
        assert_eq!(report.get("[D,R]-R").unwrap().status, Status::Pass);
        assert!(report.failed());
    }

    #[test]
    fn scalar_detection() {
        let m: Matrix<Rational> = Matrix::identity(3).scale(&rat(7, 64));
        assert_eq!(scalar_value(&m), Some(rat(7, 64)));
        let m: Matrix<Rational> = Matrix::from_diagonal(vec![int(1), int(2)]);
        assert_eq!(scalar_value(&m), None);
    }
}
