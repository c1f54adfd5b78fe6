//! Deformed oscillators `[N, A] = -A`, `[N, A†] = A†`, `[A, A†] = F(N)`, and
//! the quadratic oscillator obtained by rescaling `Q⁻(1,1)`.
//!
//! In triple language `(D, R, L) = (N, A†, A)` the structure polynomial is
//! `f = -F`.

use num_traits::{One, Signed, Zero};

use crate::algebra::PolyAlgebra;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Scalar};
use crate::poly::Polynomial;
use crate::rational::{int, rat, to_f64, Rational};
use crate::report::EntryReport;
use crate::triple::GeneratorTriple;
use crate::verify::{verify_realization, Check, VerificationReport, UNITARY_TOLERANCE};

use super::q11::{q11_algebra, q11_irrep, q11_irrep_exact, su11_casimir_value};

#[derive(Debug, Clone, PartialEq)]
pub struct DeformedOscillator<T> {
    pub n: Matrix<T>,
    pub a: Matrix<T>,
    pub a_dag: Matrix<T>,
    /// `F` in `[A, A†] = F(N)`.
    pub structure: Polynomial,
}

impl<T: Scalar> DeformedOscillator<T> {
    pub fn as_triple(&self) -> GeneratorTriple<T> {
        GeneratorTriple { d: self.n.clone(), r: self.a_dag.clone(), l: self.a.clone() }
    }

    pub fn verify(&self, tolerance: f64) -> Result<VerificationReport> {
        let mut report = VerificationReport::default();
        let check = |name: &str, m: Matrix<T>| Check::from_residual(name, m.residual(), tolerance);
        report.push(check("[N,A]+A", &self.n.commutator(&self.a) + &self.a));
        report.push(check("[N,A†]-A†", &self.n.commutator(&self.a_dag) - &self.a_dag));
        let f_n = self.n.poly_of_diagonal(&self.structure)?;
        report.push(check("[A,A†]-F(N)", &self.a.commutator(&self.a_dag) - &f_n));
        Ok(report)
    }
}

/// The canonical fermion: `N = diag(0, 1)`, `f = E12`, `f† = E21`.
pub fn canonical_fermion() -> DeformedOscillator<Rational> {
    DeformedOscillator {
        n: Matrix::from_diagonal(vec![int(0), int(1)]),
        a: Matrix::from_entries(2, [(0, 1, int(1))]),
        a_dag: Matrix::from_entries(2, [(1, 0, int(1))]),
        structure: Polynomial::new(vec![int(1), rat(-1, 2), rat(-3, 2)]),
    }
}

/// `s = L(L + 1) - K`, which must be positive.
pub fn normalizer(big_k: &Rational, big_l: &Rational) -> Result<Rational> {
    let s = big_l * (big_l + int(1)) - big_k;
    if s.is_positive() {
        Ok(s)
    } else {
        Err(Error::NonpositiveNormalizer(s))
    }
}

/// `F(N) = 1 - (2L - 1)/s N - 3/s N²`.
pub fn quadratic_structure(big_k: &Rational, big_l: &Rational) -> Result<Polynomial> {
    let s = normalizer(big_k, big_l)?;
    Ok(q11_algebra(big_k, big_l).f.scale(&(-Rational::one() / s)))
}

/// `N = Q0`, `A = Q- / sqrt(s)`, `A† = Q+ / sqrt(s)` on a unitary triple.
pub fn quadratic_oscillator(
    big_k: &Rational,
    big_l: &Rational,
    triple: &GeneratorTriple<f64>,
) -> Result<DeformedOscillator<f64>> {
    let structure = quadratic_structure(big_k, big_l)?;
    let inv_root = 1.0 / to_f64(&normalizer(big_k, big_l)?).sqrt();
    Ok(DeformedOscillator {
        n: triple.d.clone(),
        a: triple.l.scale(&inv_root),
        a_dag: triple.r.scale(&inv_root),
        structure,
    })
}

/// The weighted form: the whole factor `1/s` goes on `A†`, keeping entries rational.
pub fn quadratic_oscillator_exact(
    big_k: &Rational,
    big_l: &Rational,
    triple: &GeneratorTriple<Rational>,
) -> Result<DeformedOscillator<Rational>> {
    let structure = quadratic_structure(big_k, big_l)?;
    let inv = Rational::one() / normalizer(big_k, big_l)?;
    Ok(DeformedOscillator {
        n: triple.d.clone(),
        a: triple.l.clone(),
        a_dag: triple.r.scale(&inv),
        structure,
    })
}

fn tagged(prefix: &str, report: VerificationReport) -> Vec<Check> {
    report
        .checks
        .into_iter()
        .map(|mut c| {
            c.name = format!("{prefix}{}", c.name);
            c
        })
        .collect()
}

pub fn fermion_report() -> Result<EntryReport> {
    let fermion = canonical_fermion();
    let mut report = EntryReport::new("fermion").derived(&fermion.structure);
    report.extend(fermion.verify(0.0)?.checks);
    let alg = PolyAlgebra::new(-&fermion.structure);
    report.extend(tagged("triple ", verify_realization(&fermion.as_triple(), &alg, 0.0)?));
    // The fermion is the (k, l) = (1, 1) quadratic oscillator.
    let (k, l) = (int(1), int(1));
    let rescaled = quadratic_oscillator_exact(&su11_casimir_value(&k), &l, &q11_irrep_exact(&k, &l)?)?;
    report.push(Check::from_bool("is-q11-oscillator(1,1)", rescaled == fermion, "0"));
    Ok(report.constant("k", &k).constant("l", &l))
}

/// Both flavors of the quadratic oscillator on every `(k, l)` irrep with
/// `2k <= max_twice_k` and `2l - k <= max_span`.
pub fn quadratic_oscillator_report(max_twice_k: i64, max_span: i64) -> Result<EntryReport> {
    let mut report = EntryReport::new("quadratic-oscillator");
    let mut exact_ok = true;
    let mut numeric_worst = 0.0f64;
    let mut count = 0;
    for (k, l) in super::q11::q11_grid(max_twice_k, max_span) {
        let big_k = su11_casimir_value(&k);
        let exact = quadratic_oscillator_exact(&big_k, &l, &q11_irrep_exact(&k, &l)?)?;
        exact_ok &= exact.verify(0.0)?.checks.iter().all(Check::passed);
        let numeric = quadratic_oscillator(&big_k, &l, &q11_irrep(&k, &l)?)?;
        let f_n = numeric.n.poly_of_diagonal(&numeric.structure)?;
        let r = (&numeric.a.commutator(&numeric.a_dag) - &f_n).residual();
        numeric_worst = numeric_worst.max(r.max_abs);
        count += 1;
    }
    report.push(Check::from_bool("exact [A,A†]=F(N)", exact_ok, if exact_ok { "0" } else { "nonzero" }));
    report.push(
        Check::from_bool("numeric [A,A†]=F(N)", numeric_worst <= UNITARY_TOLERANCE, format!("{numeric_worst:e}"))
            .with_note(format!("{count} grid points")),
    );
    let boundary = normalizer(&int(2), &int(1));
    report.push(Check::from_bool(
        "degenerate-normalizer-rejected",
        matches!(boundary, Err(Error::NonpositiveNormalizer(ref s)) if s.is_zero()),
        "0",
    ));
    Ok(report.constant("max_span", &int(max_span)).constant("max_twice_k", &int(max_twice_k)))
}
