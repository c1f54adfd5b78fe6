//! Abstract polynomial algebras `[N0, N±] = ±N±`, `[N+, N-] = f(N0)`, their
//! Casimir operators and finite-dimensional lowest-weight representations.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{Matrix, Scalar};
use crate::poly::Polynomial;
use crate::rational::{int, serialize_rational, to_f64, Rational};
use crate::triple::{Flavor, GeneratorTriple};

/// A three-generator polynomial algebra, fully determined by its structure polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyAlgebra {
    pub f: Polynomial,
}

impl PolyAlgebra {
    pub fn new(f: Polynomial) -> Self {
        PolyAlgebra { f }
    }

    /// `su(2)`: `[J+, J-] = 2 J0`.
    pub fn su2() -> Self {
        PolyAlgebra::new(Polynomial::from_ints(&[0, 2]))
    }

    /// `su(1,1)`: `[K+, K-] = -2 K0`.
    pub fn su11() -> Self {
        PolyAlgebra::new(Polynomial::from_ints(&[0, -2]))
    }

    /// Oscillator `(N, a†, a)`: `[a†, a] = -1`.
    pub fn heisenberg() -> Self {
        PolyAlgebra::new(Polynomial::from_ints(&[-1]))
    }

    /// Degree of `f`; the zero polynomial counts as order 0.
    pub fn order(&self) -> usize {
        self.f.degree().unwrap_or(0)
    }

    pub fn casimir(&self) -> CasimirSpec {
        casimir_from_structure(self)
    }
}

/// `C = N+ N- + h(N0)`, normalized by `h(0) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CasimirSpec {
    pub h: Polynomial,
}

impl CasimirSpec {
    /// The Casimir operator `R L + h(D)` of a triple.
    pub fn operator<T: Scalar>(&self, triple: &GeneratorTriple<T>) -> Result<Matrix<T>> {
        Ok(&(&triple.r * &triple.l) + &triple.d.poly_of_diagonal(&self.h)?)
    }
}

/// Centrality of `N+ N- + h(N0)` forces `h(x + 1) - h(x) = f(x)`.
pub fn casimir_from_structure(alg: &PolyAlgebra) -> CasimirSpec {
    CasimirSpec { h: alg.f.shift(&int(-1)).antidifference() }
}

/// A finite lowest-weight irrep: `N0` runs over `mu, mu + 1, ..., mu + dim - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IrrepLabel {
    #[serde(serialize_with = "serialize_rational")]
    pub mu: Rational,
    pub dim: usize,
    #[serde(serialize_with = "serialize_rational")]
    pub casimir_value: Rational,
}

impl IrrepLabel {
    /// The label whose Casimir value makes `mu` a lowest weight (`t_0 = 0`).
    pub fn lowest(alg: &PolyAlgebra, mu: Rational, dim: usize) -> Self {
        let casimir_value = alg.casimir().h.eval(&mu);
        IrrepLabel { mu, dim, casimir_value }
    }
}

/// `t_q = c - h(mu + q)` for `q = 0..=dim`, without any validation.
pub fn ladder_values(alg: &PolyAlgebra, label: &IrrepLabel) -> Vec<Rational> {
    let h = alg.casimir().h;
    (0..=label.dim)
        .map(|q| &label.casimir_value - h.eval(&(&label.mu + int(q as i64))))
        .collect()
}

/// Ladder coefficients `(t_0, ..., t_dim)` of a unitarizable label.
///
/// `t_q` is the eigenvalue of `N+ N-` on the `q`-th weight state; the boundary
/// values must vanish and the interior must be strictly positive.
pub fn ladder_coefficients(alg: &PolyAlgebra, label: &IrrepLabel) -> Result<Vec<Rational>> {
    let t = closed_ladder(alg, label)?;
    if let Some(q) = (1..label.dim).find(|&q| !t[q].is_positive()) {
        return Err(Error::NotUnitarizable { index: q, value: t[q].clone() });
    }
    Ok(t)
}

/// Ladder values with closed boundaries and a nonvanishing interior.
fn closed_ladder(alg: &PolyAlgebra, label: &IrrepLabel) -> Result<Vec<Rational>> {
    if label.dim == 0 {
        return Err(Error::DimensionMismatch("irrep dimension must be at least 1".into()));
    }
    let t = ladder_values(alg, label);
    for q in [0, label.dim] {
        if !t[q].is_zero() {
            return Err(Error::OpenLabel { dim: q, value: t[q].clone() });
        }
    }
    if let Some(q) = (1..label.dim).find(|&q| t[q].is_zero()) {
        return Err(Error::NotUnitarizable { index: q, value: t[q].clone() });
    }
    Ok(t)
}

/// All unitarizable finite irreps with a lowest weight among `mu_candidates`
/// and dimension at most `max_dim`.
pub fn find_finite_irreps(
    alg: &PolyAlgebra,
    mu_candidates: &[Rational],
    max_dim: usize,
) -> Vec<IrrepLabel> {
    let h = alg.casimir().h;
    let mut seen = Vec::new();
    let mut labels = Vec::new();
    for mu in mu_candidates {
        if seen.contains(mu) {
            continue;
        }
        seen.push(mu.clone());
        let c = h.eval(mu);
        for d in 1..=max_dim {
            let t = &c - h.eval(&(mu + int(d as i64)));
            if t.is_zero() {
                labels.push(IrrepLabel { mu: mu.clone(), dim: d, casimir_value: c.clone() });
            }
            if !t.is_positive() {
                break;
            }
        }
    }
    labels
}

/// Verma-style exact matrices: `R` carries `t_{q+1}` below the diagonal, `L` ones above.
pub fn build_irrep_exact(alg: &PolyAlgebra, label: &IrrepLabel) -> Result<GeneratorTriple<Rational>> {
    let t = closed_ladder(alg, label)?;
    Ok(exact_from_ladder(&label.mu, &t[..label.dim]))
}

/// Unitary matrices with `sqrt(t_{q+1})` on both off-diagonals.
pub fn build_irrep_unitary(alg: &PolyAlgebra, label: &IrrepLabel) -> Result<GeneratorTriple<f64>> {
    let t = ladder_coefficients(alg, label)?;
    Ok(unitary_from_ladder(&label.mu, &t[..label.dim]))
}

/// Either flavor, for callers that choose at run time.
pub enum AnyTriple {
    Exact(GeneratorTriple<Rational>),
    Numeric(GeneratorTriple<f64>),
}

pub fn build_irrep(alg: &PolyAlgebra, label: &IrrepLabel, flavor: Flavor) -> Result<AnyTriple> {
    match flavor {
        Flavor::VermaExact => build_irrep_exact(alg, label).map(AnyTriple::Exact),
        Flavor::UnitaryNumeric => build_irrep_unitary(alg, label).map(AnyTriple::Numeric),
    }
}

/// `t[q]` is the `N+ N-` eigenvalue of weight state `q`; `t[0]` must be zero.
pub fn exact_from_ladder(mu: &Rational, t: &[Rational]) -> GeneratorTriple<Rational> {
    let dim = t.len();
    let d = Matrix::from_diagonal((0..dim).map(|q| mu + int(q as i64)).collect());
    let r = Matrix::from_entries(dim, (1..dim).map(|q| (q, q - 1, t[q].clone())));
    let l = Matrix::from_entries(dim, (1..dim).map(|q| (q - 1, q, Rational::one())));
    GeneratorTriple { d, r, l }
}

pub fn unitary_from_ladder(mu: &Rational, t: &[Rational]) -> GeneratorTriple<f64> {
    let dim = t.len();
    let d = Matrix::from_diagonal((0..dim).map(|q| to_f64(&(mu + int(q as i64)))).collect());
    let root = |q: usize| to_f64(&t[q]).sqrt();
    let r = Matrix::from_entries(dim, (1..dim).map(|q| (q, q - 1, root(q))));
    let l = Matrix::from_entries(dim, (1..dim).map(|q| (q - 1, q, root(q))));
    GeneratorTriple { d, r, l }
}

/// The first `size` weight states of a lowest-weight module at `mu` that need
/// not close; the top column of `R` is marked truncated.
pub fn truncated_verma(alg: &PolyAlgebra, mu: &Rational, size: usize) -> GeneratorTriple<Rational> {
    let label = IrrepLabel { dim: size, ..IrrepLabel::lowest(alg, mu.clone(), size) };
    let t = ladder_values(alg, &label);
    let mut triple = exact_from_ladder(mu, &t[..size]);
    if !t[size].is_zero() {
        triple.r = triple.r.with_truncated([size - 1]);
    }
    triple
}

/// Lowest weight `-j` irrep label of `su(2)`.
pub fn su2_label(j: &Rational) -> IrrepLabel {
    let dim = (j * int(2) + int(1)).to_integer();
    let dim: usize = dim.try_into().expect("spin must be a nonnegative half-integer");
    IrrepLabel::lowest(&PolyAlgebra::su2(), -j.clone(), dim)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn casimir_examples() {
        assert_eq!(PolyAlgebra::su2().casimir().h, Polynomial::from_ints(&[0, -1, 1]));
        // f = 3x^2 + (2L-1)x at L = 3/2
        let h = PolyAlgebra::new(Polynomial::from_ints(&[0, 2, 3])).casimir().h;
        assert_eq!(h, Polynomial::new(vec![int(0), rat(-1, 2), rat(-1, 2), int(1)]));
        assert!(PolyAlgebra::new(Polynomial::zero()).casimir().h.is_zero());
    }

    #[test]
    fn casimir_matches_spin_operator_identity() {
        // J+J- = J^2 - J0^2 + J0 on a spin-j irrep, so h(x) = x^2 - x gives C = J^2.
        let j = rat(3, 2);
        let label = su2_label(&j);
        assert_eq!(label.casimir_value, &j * (&j + int(1)));
    }

    #[test]
    fn q11_casimir_closed_form() {
        // f = 3x^2 + (2L-1)x + (K - L(L+1)) has Casimir x^3 + (L-2)x^2 + (K - L^2 - 2L + 1)x.
        let (k, l) = (rat(1, 4), rat(3, 4));
        let f = Polynomial::new(vec![&k - &l * (&l + int(1)), &l * int(2) - int(1), int(3)]);
        let h = PolyAlgebra::new(f).casimir().h;
        let expected = Polynomial::new(vec![
            int(0),
            &k - &l * &l - &l * int(2) + int(1),
            &l - int(2),
            int(1),
        ]);
        assert_eq!(h, expected);
    }

    #[test]
    fn ladder_examples() {
        let su2 = PolyAlgebra::su2();
        let t = ladder_coefficients(&su2, &su2_label(&int(1))).unwrap();
        assert_eq!(t, vec![int(0), int(2), int(2), int(0)]);
        let t = ladder_coefficients(&su2, &su2_label(&int(0))).unwrap();
        assert_eq!(t, vec![int(0), int(0)]);
    }

    #[test]
    fn ladder_rejects_bad_labels() {
        let su2 = PolyAlgebra::su2();
        // mu = 1/2 is a highest weight, not a lowest one: t_1 < 0.
        let label = IrrepLabel::lowest(&su2, rat(1, 2), 2);
        assert!(matches!(ladder_coefficients(&su2, &label), Err(Error::OpenLabel { .. })));
        let label = IrrepLabel { mu: int(-1), dim: 2, casimir_value: int(2) };
        assert!(matches!(ladder_coefficients(&su2, &label), Err(Error::OpenLabel { .. })));
        // su(1,1) with a negative-norm interior.
        let su11 = PolyAlgebra::su11();
        let label = IrrepLabel::lowest(&su11, rat(-1, 2), 2);
        assert_eq!(ladder_values(&su11, &label)[2], int(0));
        assert!(matches!(
            ladder_coefficients(&su11, &label),
            Err(Error::NotUnitarizable { index: 1, .. })
        ));
    }

    #[test]
    fn su2_irreps_found() {
        let candidates: Vec<_> = (-10..=0).map(|n| rat(n, 2)).collect();
        let labels = find_finite_irreps(&PolyAlgebra::su2(), &candidates, 16);
        assert_eq!(labels.len(), 11);
        for l in &labels {
            assert_eq!(int(l.dim as i64), -&l.mu * int(2) + int(1));
        }
        assert!(find_finite_irreps(&PolyAlgebra::su2(), &[rat(1, 3)], 10).is_empty());
    }

    #[test]
    fn spin_half_unitary_is_pauli_ladder() {
        let su2 = PolyAlgebra::su2();
        let triple = build_irrep_unitary(&su2, &su2_label(&rat(1, 2))).unwrap();
        assert_eq!(triple.d.diagonal(), vec![-0.5, 0.5]);
        assert_eq!(triple.r.to_dense(), vec![vec![0.0, 0.0], vec![1.0, 0.0]]);
        assert_eq!(triple.l.to_dense(), vec![vec![0.0, 1.0], vec![0.0, 0.0]]);
    }

    #[test]
    fn spin_one_exact_commutator() {
        let su2 = PolyAlgebra::su2();
        let triple = build_irrep_exact(&su2, &su2_label(&int(1))).unwrap();
        let comm = triple.r.commutator(&triple.l);
        assert_eq!(comm, Matrix::from_diagonal(vec![int(-2), int(0), int(2)]));
        assert_eq!(comm, triple.d.scale(&int(2)));
    }

    #[test]
    fn unitary_rejects_negative_norm() {
        let su11 = PolyAlgebra::su11();
        let label = IrrepLabel::lowest(&su11, rat(-1, 2), 2);
        assert!(build_irrep_unitary(&su11, &label).is_err());
        // The exact flavor only needs closure.
        assert!(build_irrep_exact(&su11, &label).is_ok());
    }

    #[test]
    fn truncated_module_marks_top() {
        let t = truncated_verma(&PolyAlgebra::su11(), &rat(1, 2), 5);
        assert!(t.r.is_truncated(4));
        assert_eq!(t.r.get(1, 0), int(1)); // q(q + 2k - 1) at q = 1, k = 1/2
        assert_eq!(t.r.get(4, 3), int(16));
    }
}
