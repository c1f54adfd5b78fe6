//! Jordan–Schwinger composition of two polynomial-algebra realizations.
//!
//! From `(P0, P+, P-)` of order `m` and `(Q0, Q+, Q-)` of order `n` acting on
//! independent degrees of freedom:
//!
//! * plus:  `Π± = P± Q±`, `Π0 = (P0 + Q0)/2`, conserved `Π = (P0 - Q0)/2`
//! * cross: `Π+ = P+ Q-`, `Π- = P- Q+`, `Π0 = (P0 - Q0)/2`, conserved `Π = (P0 + Q0)/2`
//!
//! On each fixed-`Π` sector `[Π+, Π-]` is a polynomial of degree `m + n + 1`
//! in `Π0`. We recover that polynomial by exact interpolation of the sector
//! matrices rather than by expanding Casimirs symbolically.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{Charge, Realization, Sector};
use crate::matrix::{Matrix, Scalar};
use crate::poly::Polynomial;
use crate::rational::{rat, serialize_rational, Rational};
use crate::triple::GeneratorTriple;
use crate::verify::UNITARY_TOLERANCE;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    Plus,
    Cross,
}

impl std::str::FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Variant::Plus),
            "cross" => Ok(Variant::Cross),
            other => Err(Error::Parse(format!("unknown variant '{other}' (plus|cross)"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Composition<T> {
    pub variant: Variant,
    pub left: GeneratorTriple<T>,
    pub right: GeneratorTriple<T>,
    pub pi0: Matrix<T>,
    pub pi_plus: Matrix<T>,
    pub pi_minus: Matrix<T>,
    pub pi: Matrix<T>,
}

impl<T: Scalar> Composition<T> {
    /// The composed generators `(Π0, Π+, Π-)` as a triple.
    pub fn triple(&self) -> GeneratorTriple<T> {
        GeneratorTriple {
            d: self.pi0.clone(),
            r: self.pi_plus.clone(),
            l: self.pi_minus.clone(),
        }
    }

    /// The composed triple on a sector.
    pub fn sector_triple(&self, sector: &Sector) -> Result<GeneratorTriple<T>> {
        self.triple().restrict(&sector.indices)
    }
}

fn vanishes<T: Scalar>(m: &Matrix<T>) -> bool {
    m.residual().within(UNITARY_TOLERANCE)
}

/// Composes two triples that already act on the same space.
///
/// Fails if the two triples do not commute (they must act on disjoint
/// factors) or if `Π` does not commute with `Π±`.
pub fn compose<T: Scalar>(
    left: &GeneratorTriple<T>,
    right: &GeneratorTriple<T>,
    variant: Variant,
) -> Result<Composition<T>> {
    if left.dim() != right.dim() {
        return Err(Error::DimensionMismatch(format!(
            "left acts on {} states, right on {}",
            left.dim(),
            right.dim()
        )));
    }
    for x in [&left.d, &left.r, &left.l] {
        for y in [&right.d, &right.r, &right.l] {
            if !vanishes(&x.commutator(y)) {
                return Err(Error::DimensionMismatch(
                    "left and right generators do not commute".into(),
                ));
            }
        }
    }
    let half = T::from_rational(&rat(1, 2));
    let sum = (&left.d + &right.d).scale(&half);
    let diff = (&left.d - &right.d).scale(&half);
    let (pi0, pi, pi_plus, pi_minus) = match variant {
        Variant::Plus => (sum, diff, &left.r * &right.r, &left.l * &right.l),
        Variant::Cross => (diff, sum, &left.r * &right.l, &left.l * &right.r),
    };
    if !vanishes(&pi.commutator(&pi_plus)) || !vanishes(&pi.commutator(&pi_minus)) {
        return Err(Error::NotConstantOfMotion);
    }
    if !vanishes(&(&pi0.commutator(&pi_plus) - &pi_plus))
        || !vanishes(&(&pi0.commutator(&pi_minus) + &pi_minus))
    {
        return Err(Error::DimensionMismatch("[Π0, Π±] != ±Π±".into()));
    }
    Ok(Composition {
        variant,
        left: left.clone(),
        right: right.clone(),
        pi0,
        pi_plus,
        pi_minus,
        pi,
    })
}

/// Composes two triples on separate spaces via `X ⊗ 1` and `1 ⊗ Y`.
pub fn compose_tensor<T: Scalar>(
    left: &GeneratorTriple<T>,
    right: &GeneratorTriple<T>,
    variant: Variant,
) -> Result<Composition<T>> {
    compose(&left.embed_left(right.dim()), &right.embed_right(left.dim()), variant)
}

/// Composes two Fock realizations; the result carries both sets of charges
/// plus `Π` under `pi_name`.
pub fn compose_realizations(
    left: &Realization<Rational>,
    right: &Realization<Rational>,
    variant: Variant,
    pi_name: &str,
) -> Result<(Composition<Rational>, Realization<Rational>)> {
    let comp = compose(&left.triple, &right.triple, variant)?;
    let mut charges = left.charges.clone();
    charges.extend(right.charges.iter().cloned());
    charges.push(Charge::new(pi_name, comp.pi.clone()));
    let realization = Realization { triple: comp.triple(), charges };
    Ok((comp, realization))
}

impl Composition<Rational> {
    /// The fixed-`Π` sector, with `Π± Π∓` as movers.
    pub fn pi_sector(&self, value: Rational) -> Result<Sector> {
        let pi = Charge::new("Pi", self.pi.clone());
        let up_down = &self.pi_plus * &self.pi_minus;
        let down_up = &self.pi_minus * &self.pi_plus;
        Sector::extract(&[(&pi, value)], &[&up_down, &down_up])
    }

    /// Distinct eigenvalues of `Π`, ascending.
    pub fn pi_values(&self) -> Vec<Rational> {
        let mut v = self.pi.diagonal();
        v.sort();
        v.dedup();
        v
    }
}

/// The structure polynomial recovered on one sector.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StructureFit {
    pub polynomial: Polynomial,
    /// `(Π0, [Π+, Π-])` samples used for the interpolation.
    #[serde(skip)]
    pub samples: Vec<(Rational, Rational)>,
    #[serde(serialize_with = "serialize_rational")]
    pub pi: Rational,
}

impl StructureFit {
    pub fn sample_count(&self) -> usize {
        self.samples.len()
    }

    pub fn pi0_spectrum(&self) -> Vec<String> {
        self.samples.iter().map(|(x, _)| x.to_string()).collect()
    }
}

/// Interpolates `[Π+, Π-]` against `Π0` on the untruncated states of `sector`.
pub fn structure_polynomial_of(comp: &Composition<Rational>, sector: &Sector) -> Result<StructureFit> {
    if sector.is_empty() {
        return Err(Error::EmptySector);
    }
    let pi = comp.pi.restrict(&sector.indices)?;
    let pi_value = pi.get(0, 0);
    if !(&pi - &Matrix::identity(pi.dim()).scale(&pi_value)).is_zero() {
        return Err(Error::NotConstantOfMotion);
    }
    let triple = comp.sector_triple(sector)?;
    if !triple.d.is_diagonal() {
        return Err(Error::NotDiagonal("Π0 on sector".into()));
    }
    let comm = triple.r.commutator(&triple.l);
    for (i, j, _) in comm.entries() {
        if i != j && !comm.is_truncated(j) {
            return Err(Error::CompositionNotDiagonal);
        }
    }
    let mut samples: Vec<(Rational, Rational)> = Vec::new();
    for s in 0..comm.dim() {
        if comm.is_truncated(s) || !sector.safe_interior[s] {
            continue;
        }
        let x = triple.d.get(s, s);
        let y = comm.get(s, s);
        match samples.iter().find(|(px, _)| *px == x) {
            Some((_, py)) if *py != y => return Err(Error::NotAFunctionOfPi0(x)),
            Some(_) => {}
            None => samples.push((x, y)),
        }
    }
    let polynomial = if samples.is_empty() {
        Polynomial::zero()
    } else {
        Polynomial::interpolate(&samples)?
    };
    Ok(StructureFit { polynomial, samples, pi: pi_value })
}

/// Outcome of checking `deg F <= m + n + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderVerdict {
    pub bound: usize,
    pub degree: Option<usize>,
    /// `deg F <= m + n + 1`.
    pub holds: bool,
    /// `deg F == m + n + 1`, the generic case.
    pub saturated: bool,
}

pub fn verify_order_theorem(m: usize, n: usize, f: &Polynomial) -> OrderVerdict {
    let bound = m + n + 1;
    let degree = f.degree();
    OrderVerdict {
        bound,
        degree,
        holds: degree.is_none_or(|d| d <= bound),
        saturated: degree == Some(bound),
    }
}

/// Number of samples needed before a degree claim counts: `m + n + 3`.
pub fn required_samples(m: usize, n: usize) -> usize {
    m + n + 3
}

/// True when every sample lies on `f`.
pub fn fits(f: &Polynomial, samples: &[(Rational, Rational)]) -> bool {
    samples.iter().all(|(x, y)| (f.eval(x) - y).is_zero())
}
