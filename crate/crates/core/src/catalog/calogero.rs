//! The one-mode `su(2)` realization of the two-body Calogero cubic algebra:
//! `C0 = J0`, `C± = J±²/2` on the spin-`j` matrices.
//!
//! These satisfy `[C0, C±] = ±2 C±` and `[C+, C-] = -2C0³ + (2J - 1)C0` with
//! `J = j(j + 1)`. Halving `C0` gives a polynomial algebra in the usual
//! normalization with `f(x) = -16x³ + (4J - 2)x`.

use crate::algebra::{build_irrep_exact, su2_label, PolyAlgebra};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::poly::Polynomial;
use crate::rational::{int, rat, Rational};
use crate::report::EntryReport;
use crate::triple::GeneratorTriple;
use crate::verify::{verify_realization, Check, Status};

#[derive(Debug, Clone)]
pub struct Calogero {
    pub j: Rational,
    /// `J = j(j + 1)`.
    pub casimir: Rational,
    pub c0: Matrix<Rational>,
    pub c_plus: Matrix<Rational>,
    pub c_minus: Matrix<Rational>,
}

/// Builds the realization from the weighted spin-`j` matrices.
pub fn calogero_cubic(j: &Rational) -> Result<Calogero> {
    let spin = build_irrep_exact(&PolyAlgebra::su2(), &su2_label(j))?;
    let half = rat(1, 2);
    Ok(Calogero {
        j: j.clone(),
        casimir: j * (j + int(1)),
        c0: spin.d.clone(),
        c_plus: (&spin.r * &spin.r).scale(&half),
        c_minus: (&spin.l * &spin.l).scale(&half),
    })
}

impl Calogero {
    /// `-2x³ + (2J - 1)x`.
    pub fn cubic(&self) -> Polynomial {
        Polynomial::new(vec![int(0), &self.casimir * int(2) - int(1), int(0), int(-2)])
    }

    /// `(C0/2, C+, C-)`, which has unit weight shifts.
    pub fn normalized_triple(&self) -> GeneratorTriple<Rational> {
        GeneratorTriple { d: self.c0.scale(&rat(1, 2)), r: self.c_plus.clone(), l: self.c_minus.clone() }
    }

    pub fn normalized_algebra(&self) -> PolyAlgebra {
        PolyAlgebra::new(Polynomial::new(vec![
            int(0),
            &self.casimir * int(4) - int(2),
            int(0),
            int(-16),
        ]))
    }

    pub fn checks(&self) -> Result<Vec<Check>> {
        let exact = |name: &str, m: Matrix<Rational>| Check::from_residual(name, m.residual(), 0.0);
        let (cp, cm) = (&self.c_plus, &self.c_minus);
        let mut out = vec![
            exact("[C0,C+]-2C+", &self.c0.commutator(cp) - &cp.scale(&int(2))),
            exact("[C0,C-]+2C-", &self.c0.commutator(cm) + &cm.scale(&int(2))),
            exact("[C+,C-]-cubic(C0)", &cp.commutator(cm) - &self.c0.poly_of_diagonal(&self.cubic())?),
        ];
        // The stated weight shift is ±1; it only holds when C± vanish.
        let printed = (&self.c0.commutator(cp) - cp).residual();
        out.push(if printed.exact_zero {
            Check::pass("printed [C0,C±]=±C±")
        } else {
            Check::new("printed [C0,C±]=±C±", Status::DeviationDocumented, printed.describe())
                .with_note("C± shift C0 by ±2")
        });
        out.extend(verify_realization(&self.normalized_triple(), &self.normalized_algebra(), 0.0)?.checks);
        Ok(out)
    }
}

/// Runs every check for `j = 1/2, 1, ..., max_twice_j/2`.
pub fn calogero_report(max_twice_j: i64) -> Result<EntryReport> {
    let mut report = EntryReport::new("calogero").constant("max_j", &rat(max_twice_j, 2));
    for twice_j in 1..=max_twice_j {
        let j = rat(twice_j, 2);
        for mut check in calogero_cubic(&j)?.checks()? {
            check.name = format!("j={j} {}", check.name);
            report.push(check);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_one_brute_force() {
        let c = calogero_cubic(&int(1)).unwrap();
        let comm = c.c_plus.commutator(&c.c_minus);
        // C0 runs -1, 0, 1 and -2x^3 + 3x gives -1, 0, 1.
        assert_eq!(comm, Matrix::from_diagonal(vec![int(-1), int(0), int(1)]));
    }

    #[test]
    fn spin_half_both_sides_vanish() {
        let c = calogero_cubic(&rat(1, 2)).unwrap();
        assert!(c.c_plus.is_zero() && c.c_minus.is_zero());
        for x in [rat(-1, 2), rat(1, 2)] {
            assert_eq!(c.cubic().eval(&x), int(0));
        }
        assert!(c.checks().unwrap().iter().all(Check::passed));
    }

    #[test]
    fn spin_two_all_five_entries() {
        let c = calogero_cubic(&int(2)).unwrap();
        let comm = c.c_plus.commutator(&c.c_minus);
        for (i, x) in c.c0.diagonal().iter().enumerate() {
            assert_eq!(comm.get(i, i), c.cubic().eval(x));
        }
    }

    #[test]
    fn up_to_spin_six() {
        let report = calogero_report(12).unwrap();
        assert!(!report.failed());
        let deviations = report.checks.iter().filter(|c| c.status == Status::DeviationDocumented).count();
        assert_eq!(deviations, 11); // every j >= 1
    }
}
