//! Truncated multi-mode bosonic Fock spaces and Schwinger-type realizations.
//!
//! Two boson conventions share one code path through [`Boson`]:
//! exact *weighted* bosons (`a†|n> = (n+1)|n+1>`, `a|n> = |n-1>`), which are a
//! diagonal similarity transform of the usual ones and keep every matrix
//! rational, and unitary `f64` bosons with the `sqrt(n)` factors.
//!
//! Creation at the cutoff `n_max` is dropped and the column is flagged as
//! truncated, so relations are only ever asserted where the truncated action
//! agrees with the infinite one.

use num_traits::One;

use crate::algebra::PolyAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Scalar};
use crate::rational::{int, rat, Rational};
use crate::triple::GeneratorTriple;

/// Entry type that knows how to represent a single boson mode.
pub trait Boson: Scalar {
    /// Coefficient of `a†|n> = c |n+1>`.
    fn raise(n: u32) -> Self;
    /// Coefficient of `a|n> = c |n-1>`.
    fn lower(n: u32) -> Self;
}

impl Boson for Rational {
    fn raise(n: u32) -> Self {
        int(n as i64 + 1)
    }
    fn lower(_n: u32) -> Self {
        Rational::one()
    }
}

impl Boson for f64 {
    fn raise(n: u32) -> Self {
        ((n + 1) as f64).sqrt()
    }
    fn lower(n: u32) -> Self {
        (n as f64).sqrt()
    }
}

/// All occupation tuples with entries in `0..=n_max`, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace {
    modes: usize,
    n_max: u32,
    basis: Vec<Vec<u32>>,
}

impl FockSpace {
    pub fn new(modes: usize, n_max: u32) -> Self {
        assert!(modes >= 1 && n_max >= 1, "need at least one mode and n_max >= 1");
        let radix = n_max as usize + 1;
        let size = radix.pow(modes as u32);
        let basis = (0..size)
            .map(|mut idx| {
                let mut occ = vec![0u32; modes];
                for slot in occ.iter_mut().rev() {
                    *slot = (idx % radix) as u32;
                    idx /= radix;
                }
                occ
            })
            .collect();
        FockSpace { modes, n_max, basis }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn n_max(&self) -> u32 {
        self.n_max
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn index_of(&self, occ: &[u32]) -> Option<usize> {
        if occ.len() != self.modes || occ.iter().any(|&n| n > self.n_max) {
            return None;
        }
        let radix = self.n_max as usize + 1;
        Some(occ.iter().fold(0, |acc, &n| acc * radix + n as usize))
    }

    fn check_mode(&self, i: usize) -> Result<()> {
        if i < self.modes {
            Ok(())
        } else {
            Err(Error::InvalidMode { index: i, modes: self.modes })
        }
    }

    /// A diagonal operator with eigenvalue `value(occupations)`.
    pub fn diagonal<T: Scalar>(&self, value: impl Fn(&[u32]) -> T) -> Matrix<T> {
        Matrix::from_diagonal(self.basis.iter().map(|occ| value(occ)).collect())
    }
}

/// Annihilation, creation and number operators of one mode.
#[derive(Debug, Clone)]
pub struct ModeOperators<T> {
    pub a: Matrix<T>,
    pub a_dag: Matrix<T>,
    pub number: Matrix<T>,
}

pub fn mode_operators<T: Boson>(space: &FockSpace, i: usize) -> Result<ModeOperators<T>> {
    space.check_mode(i)?;
    let radix = space.n_max as usize + 1;
    let stride = radix.pow((space.modes - 1 - i) as u32);
    let mut up = Vec::new();
    let mut down = Vec::new();
    let mut cut = Vec::new();
    for (col, occ) in space.basis.iter().enumerate() {
        let n = occ[i];
        if n < space.n_max {
            up.push((col + stride, col, T::raise(n)));
        } else {
            cut.push(col);
        }
        if n > 0 {
            down.push((col - stride, col, T::lower(n)));
        }
    }
    Ok(ModeOperators {
        a: Matrix::from_entries(space.dim(), down),
        a_dag: Matrix::from_entries(space.dim(), up).with_truncated(cut),
        number: space.diagonal(|occ| int(occ[i] as i64)).map(T::from_rational),
    })
}

/// A conserved diagonal charge, always exact.
#[derive(Debug, Clone)]
pub struct Charge {
    pub name: String,
    pub op: Matrix<Rational>,
}

impl Charge {
    pub fn new(name: impl Into<String>, op: Matrix<Rational>) -> Self {
        Charge { name: name.into(), op }
    }
}

/// A triple on a Fock space together with the charges that commute with it.
#[derive(Debug, Clone)]
pub struct Realization<T> {
    pub triple: GeneratorTriple<T>,
    pub charges: Vec<Charge>,
}

/// The Lie-algebra building blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// `J0 = (n_i - n_j)/2`, `J+ = a_i† a_j`, `J- = a_j† a_i`; charge `j = (n_i + n_j)/2`.
    Su2(usize, usize),
    /// `K0 = (n_i + n_j + 1)/2`, `K+ = a_i† a_j†`, `K- = a_i a_j`;
    /// Bargmann index `k = (n_j - n_i + 1)/2`, so states read `|n, n + 2k - 1>`.
    Su11(usize, usize),
    /// `(N, a†, a)` on mode `i`.
    Heisenberg(usize),
}

impl Kind {
    pub fn algebra(self) -> PolyAlgebra {
        match self {
            Kind::Su2(..) => PolyAlgebra::su2(),
            Kind::Su11(..) => PolyAlgebra::su11(),
            Kind::Heisenberg(_) => PolyAlgebra::heisenberg(),
        }
    }
}

/// Builds a Schwinger-type realization; `charge` names its conserved label (if any).
pub fn schwinger_build<T: Boson>(space: &FockSpace, kind: Kind, charge: &str) -> Result<Realization<T>> {
    let distinct = |i: usize, j: usize| -> Result<()> {
        space.check_mode(i)?;
        space.check_mode(j)?;
        if i == j {
            return Err(Error::InvalidMode { index: j, modes: space.modes });
        }
        Ok(())
    };
    match kind {
        Kind::Su2(i, j) => {
            distinct(i, j)?;
            let (mi, mj) = (mode_operators::<T>(space, i)?, mode_operators::<T>(space, j)?);
            let half = rat(1, 2);
            let d = space.diagonal(|o| (int(o[i] as i64) - int(o[j] as i64)) * &half);
            let j_op = space.diagonal(|o| (int(o[i] as i64) + int(o[j] as i64)) * &half);
            Ok(Realization {
                triple: GeneratorTriple::new(
                    d.map(T::from_rational),
                    &mi.a_dag * &mj.a,
                    &mj.a_dag * &mi.a,
                )?,
                charges: vec![Charge::new(charge, j_op)],
            })
        }
        Kind::Su11(i, j) => {
            distinct(i, j)?;
            let (mi, mj) = (mode_operators::<T>(space, i)?, mode_operators::<T>(space, j)?);
            let half = rat(1, 2);
            let d = space.diagonal(|o| (int(o[i] as i64) + int(o[j] as i64) + int(1)) * &half);
            let k_op = space.diagonal(|o| (int(o[j] as i64) - int(o[i] as i64) + int(1)) * &half);
            Ok(Realization {
                triple: GeneratorTriple::new(
                    d.map(T::from_rational),
                    &mi.a_dag * &mj.a_dag,
                    &mi.a * &mj.a,
                )?,
                charges: vec![Charge::new(charge, k_op)],
            })
        }
        Kind::Heisenberg(i) => {
            let m = mode_operators::<T>(space, i)?;
            Ok(Realization {
                triple: GeneratorTriple::new(m.number, m.a_dag, m.a)?,
                charges: Vec::new(),
            })
        }
    }
}

/// The su(1,1) Casimir in the form `(1/4)[1 - (n_i - n_j)^2]`, i.e. `k(1 - k)`.
pub fn su11_casimir(space: &FockSpace, i: usize, j: usize) -> Matrix<Rational> {
    space.diagonal(|o| {
        let diff = int(o[i] as i64) - int(o[j] as i64);
        (int(1) - &diff * &diff) * rat(1, 4)
    })
}

/// Basis states sharing prescribed eigenvalues of a set of diagonal charges.
#[derive(Debug, Clone, PartialEq)]
pub struct Sector {
    /// Indices into the parent basis, ascending.
    pub indices: Vec<usize>,
    pub charges: Vec<(String, Rational)>,
    /// States whose images under every mover were computed without truncation.
    pub safe_interior: Vec<bool>,
}

impl Sector {
    /// Extracts the joint eigenspace; an empty result is not an error.
    pub fn extract<T: Scalar>(
        constraints: &[(&Charge, Rational)],
        movers: &[&Matrix<T>],
    ) -> Result<Self> {
        let dim = constraints
            .first()
            .map(|(c, _)| c.op.dim())
            .or_else(|| movers.first().map(|m| m.dim()))
            .unwrap_or(0);
        let mut diagonals = Vec::with_capacity(constraints.len());
        for (charge, _) in constraints {
            if !charge.op.is_diagonal() {
                return Err(Error::NotDiagonal(format!("charge {}", charge.name)));
            }
            if charge.op.dim() != dim {
                return Err(Error::DimensionMismatch(format!("charge {}", charge.name)));
            }
            diagonals.push(charge.op.diagonal());
        }
        let indices: Vec<usize> = (0..dim)
            .filter(|&s| constraints.iter().zip(&diagonals).all(|((_, v), diag)| &diag[s] == v))
            .collect();
        let safe_interior = indices
            .iter()
            .map(|&s| movers.iter().all(|m| !m.is_truncated(s)))
            .collect();
        Ok(Sector {
            indices,
            charges: constraints.iter().map(|(c, v)| (c.name.clone(), v.clone())).collect(),
            safe_interior,
        })
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn safe_count(&self) -> usize {
        self.safe_interior.iter().filter(|&&s| s).count()
    }

    /// Occupation tuples of the sector states.
    pub fn states<'a>(&'a self, space: &'a FockSpace) -> impl Iterator<Item = &'a [u32]> + 'a {
        self.indices.iter().map(move |&i| space.basis()[i].as_slice())
    }
}

/// Single-charge convenience form of [`Sector::extract`].
pub fn sector_extract<T: Scalar>(
    charge: &Charge,
    value: Rational,
    movers: &[&Matrix<T>],
) -> Result<Sector> {
    Sector::extract(&[(charge, value)], movers)
}

/// `op` compressed onto the sector basis.
pub fn restrict<T: Scalar>(op: &Matrix<T>, sector: &Sector) -> Result<Matrix<T>> {
    op.restrict(&sector.indices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_realization, Status, UNITARY_TOLERANCE};

    #[test]
    fn basis_is_lexicographic() {
        let space = FockSpace::new(2, 2);
        assert_eq!(space.dim(), 9);
        assert_eq!(space.basis()[0], vec![0, 0]);
        assert_eq!(space.basis()[1], vec![0, 1]);
        assert_eq!(space.basis()[3], vec![1, 0]);
        assert_eq!(space.index_of(&[2, 1]), Some(7));
        assert_eq!(space.index_of(&[3, 0]), None);
    }

    #[test]
    fn number_and_canonical_commutator() {
        let space = FockSpace::new(2, 4);
        let m = mode_operators::<Rational>(&space, 0).unwrap();
        let idx = space.index_of(&[3, 1]).unwrap();
        assert_eq!(m.number.get(idx, idx), int(3));
        assert_eq!(&m.a_dag * &m.a, m.number);
        let comm = &m.a.commutator(&m.a_dag) - &Matrix::identity(space.dim());
        let r = comm.residual();
        assert!(r.exact_zero);
        // Columns with n_0 = n_max are excluded.
        assert_eq!(r.checked_columns, space.dim() - 5);
    }

    #[test]
    fn unitary_bosons() {
        let space = FockSpace::new(1, 5);
        let m = mode_operators::<f64>(&space, 0).unwrap();
        let n = &m.a_dag * &m.a;
        assert!((&n - &m.number).residual().within(1e-14));
        assert!((&m.a.commutator(&m.a_dag) - &Matrix::identity(6)).residual().within(1e-14));
        assert!((&m.a_dag.transpose() - &m.a).residual().max_abs < 1e-15);
    }

    #[test]
    fn invalid_modes() {
        let space = FockSpace::new(2, 3);
        assert!(mode_operators::<Rational>(&space, 2).is_err());
        assert!(schwinger_build::<Rational>(&space, Kind::Su2(0, 0), "j").is_err());
        assert!(schwinger_build::<Rational>(&space, Kind::Su11(0, 5), "k").is_err());
    }

    #[test]
    fn su2_schwinger_on_safe_interior() {
        let space = FockSpace::new(2, 4);
        let real = schwinger_build::<Rational>(&space, Kind::Su2(0, 1), "j").unwrap();
        let report = verify_realization(&real.triple, &PolyAlgebra::su2(), 0.0).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn su11_schwinger_on_safe_interior() {
        let space = FockSpace::new(2, 5);
        let real = schwinger_build::<Rational>(&space, Kind::Su11(0, 1), "k").unwrap();
        let report = verify_realization(&real.triple, &PolyAlgebra::su11(), 0.0).unwrap();
        assert!(report.all_pass(), "{report:?}");
        let real = schwinger_build::<f64>(&space, Kind::Su11(0, 1), "k").unwrap();
        let report = verify_realization(&real.triple, &PolyAlgebra::su11(), UNITARY_TOLERANCE).unwrap();
        assert!(report.all_pass(), "{report:?}");
    }

    #[test]
    fn su11_casimir_is_quarter_formula() {
        // K0^2 - K0 - K+K- = k(k - 1) = -(1/4)[1 - (n_0 - n_1)^2] on the unitary realization.
        let space = FockSpace::new(2, 6);
        let real = schwinger_build::<Rational>(&space, Kind::Su11(0, 1), "k").unwrap();
        let t = &real.triple;
        let c = &(&(&t.d * &t.d) - &t.d) - &(&t.r * &t.l);
        let target = su11_casimir(&space, 0, 1).scale(&int(-1));
        assert!((&c - &target).residual().exact_zero);
    }

    #[test]
    fn heisenberg_realization() {
        let space = FockSpace::new(1, 6);
        let real = schwinger_build::<Rational>(&space, Kind::Heisenberg(0), "").unwrap();
        let report = verify_realization(&real.triple, &PolyAlgebra::heisenberg(), 0.0).unwrap();
        assert!(report.all_pass());
        assert_eq!(report.get("[R,L]-f(D)").unwrap().status, Status::Pass);
    }

    #[test]
    fn sectors() {
        let space = FockSpace::new(3, 3);
        let total = Charge::new("N", space.diagonal(|o| int(o.iter().sum::<u32>() as i64)));
        let empty = sector_extract::<Rational>(&total, int(10), &[]).unwrap();
        assert!(empty.is_empty());
        let two = sector_extract::<Rational>(&total, int(2), &[]).unwrap();
        assert_eq!(two.dim(), 6);
        let restricted = restrict(&total.op, &two).unwrap();
        assert_eq!(restricted, Matrix::identity(6).scale(&int(2)));
        assert_eq!(restrict(&Matrix::<Rational>::identity(space.dim()), &two).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn two_mode_difference_sector() {
        // Two single-mode "su(2)" pieces: Pi = (n_0 - n_1)/2 = 0 picks the diagonal occupations.
        let space = FockSpace::new(2, 3);
        let pi = Charge::new("Pi", space.diagonal(|o| (int(o[0] as i64) - int(o[1] as i64)) * rat(1, 2)));
        let sector = sector_extract::<Rational>(&pi, int(0), &[]).unwrap();
        let states: Vec<_> = sector.states(&space).map(|s| s.to_vec()).collect();
        assert_eq!(states, vec![vec![0, 0], vec![1, 1], vec![2, 2], vec![3, 3]]);
    }
}
