//! Polynomial-identity matching of the SUSY-partner ladder algebras.
//!
//! The stated commutators are polynomials `P(H)` in the partner Hamiltonian.
//! A triple `(N0, N+, N-)` with `H = alpha N0 + beta` (`alpha = ±1`;
//! `alpha = -1` swaps raising and lowering) and ladders rescaled by
//! `sqrt(s)` has structure polynomial `T(x) = s alpha P(alpha x + beta)`.
//! We look for such a `T` inside a catalog family.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{fmt_rational, int, rat, Rational};
use crate::report::EntryReport;
use crate::verify::{Check, Status};

use super::q11::q11_algebra;
use super::Constants;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SusyCase {
    Linear,
    Radial,
}

/// `[B†, B] = -3H² + 4εH - ε²`.
pub fn linear_commutator(eps: &Rational) -> Polynomial {
    Polynomial::new(vec![-(eps * eps), eps * int(4), int(-3)])
}

/// `[D†, D] = -8H³ - 12(γ + ε + 1/2)H² + 4(ε² + ε + 1 + 2εγ)`.
pub fn radial_commutator(gamma: &Rational, eps: &Rational) -> Polynomial {
    Polynomial::new(vec![
        (eps * eps + eps + int(1) + int(2) * eps * gamma) * int(4),
        int(0),
        (gamma + eps + rat(1, 2)) * int(-12),
        int(-8),
    ])
}

/// `s alpha P(alpha x + beta)`.
pub fn affine_transform(p: &Polynomial, alpha: i64, beta: &Rational, scale: &Rational) -> Polynomial {
    p.compose_affine(&int(alpha), beta).scale(&(scale * int(alpha)))
}

/// The `(alpha, s)` with `s > 0` that give `T` the leading coefficient `lead`.
fn leading_match(p: &Polynomial, lead: &Rational) -> Option<(i64, Rational)> {
    let deg = p.degree()? as u32;
    [1i64, -1].into_iter().find_map(|alpha| {
        let sign = int(alpha.pow(deg + 1));
        let s = lead / (p.leading() * sign);
        s.is_positive().then_some((alpha, s))
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct AffineMatch {
    pub alpha: i64,
    pub beta: Rational,
    pub scale: Rational,
    pub transformed: Polynomial,
    /// The matched family member.
    pub target: Polynomial,
    pub constants: Constants,
}

impl AffineMatch {
    pub fn residual(&self) -> Polynomial {
        &self.transformed - &self.target
    }
}

/// Matches `P` against `Q⁻(1,1)`: `3x² + (2L - 1)x + K - L(L + 1)`.
///
/// `beta` is fixed to 0; `L` and `K` are then determined by the linear and
/// constant coefficients.
pub fn match_q11(p: &Polynomial) -> Result<AffineMatch> {
    if p.degree() != Some(2) {
        return Err(Error::DegreeMismatch { expected: 2, derived: p.degree() });
    }
    let (alpha, scale) = leading_match(p, &int(3))
        .ok_or_else(|| Error::Parse("no affine match with positive scale".into()))?;
    let beta = Rational::zero();
    let transformed = affine_transform(p, alpha, &beta, &scale);
    let big_l = (transformed.coeff(1) + int(1)) * rat(1, 2);
    let big_k = transformed.coeff(0) + &big_l * (&big_l + int(1));
    let target = q11_algebra(&big_k, &big_l).f;
    let constants = BTreeMap::from([("K".to_string(), big_k), ("L".to_string(), big_l)]);
    Ok(AffineMatch { alpha, beta, scale, transformed, target, constants })
}

fn describe(m: &AffineMatch) -> String {
    format!(
        "alpha = {}, beta = {}, s = {}, T(x) = {}",
        m.alpha,
        fmt_rational(&m.beta),
        fmt_rational(&m.scale),
        m.transformed
    )
}

/// Linear case at one `ε`.
pub fn linear_report(eps: &Rational) -> EntryReport {
    let p = linear_commutator(eps);
    let mut report = EntryReport::new("susy-linear").constant("epsilon", eps).derived(&p);
    report.push(Check::from_bool("degree", p.degree() == Some(2), Polynomial::describe_degree(p.degree())));
    match match_q11(&p) {
        Ok(m) => {
            let residual = m.residual();
            report.push(
                Check::from_bool("affine-match Q−(1,1)", residual.is_zero(), residual.to_string())
                    .with_note(describe(&m)),
            );
            for (k, v) in &m.constants {
                report.constants.insert(format!("matched {k}"), fmt_rational(v));
            }
        }
        Err(e) => report.push(Check::fail("affine-match Q−(1,1)", e.to_string())),
    }
    report
}

/// Radial case: the stated commutator must be cubic, and rescalable to the
/// leading coefficient `derived_leading` of a cubic catalog entry.
pub fn radial_report(gamma: &Rational, eps: &Rational, derived_leading: &Rational) -> EntryReport {
    let p = radial_commutator(gamma, eps);
    let mut report = EntryReport::new("susy-radial")
        .constant("gamma", gamma)
        .constant("epsilon", eps)
        .derived(&p);
    report.push(Check::from_bool("degree", p.degree() == Some(3), Polynomial::describe_degree(p.degree())));
    let check = match leading_match(&p, derived_leading) {
        Some((alpha, scale)) => {
            let t = affine_transform(&p, alpha, &Rational::zero(), &scale);
            Check::pass("leading-match C−(q−1,h)").with_note(format!(
                "alpha = {alpha}, s = {}, T(x) = {t}; lower coefficients involve undefined constants",
                fmt_rational(&scale)
            ))
        }
        None => Check::new("leading-match C−(q−1,h)", Status::Fail, "n/a")
            .with_note(format!("leading {} not reachable with s > 0", fmt_rational(derived_leading))),
    };
    report.push(check);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_eps_two() {
        let p = linear_commutator(&int(2));
        assert_eq!(p, Polynomial::from_ints(&[-4, 8, -3]));
        let m = match_q11(&p).unwrap();
        assert_eq!(m.alpha, -1);
        assert_eq!(m.scale, int(1));
        assert!(m.residual().is_zero());
        // L = (4ε + 1)/2, K = ε² + L(L + 1)
        assert_eq!(m.constants["L"], rat(9, 2));
        assert_eq!(m.constants["K"], int(4) + rat(9, 2) * rat(11, 2));
    }

    #[test]
    fn linear_eps_zero() {
        let m = match_q11(&linear_commutator(&int(0))).unwrap();
        assert_eq!(m.transformed, Polynomial::from_ints(&[0, 0, 3]));
        assert!(m.residual().is_zero());
        assert_eq!(m.constants["L"], rat(1, 2));
    }

    #[test]
    fn radial_is_cubic() {
        let p = radial_commutator(&int(1), &int(1));
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p, Polynomial::from_ints(&[20, 0, -30, -8]));
        let r = radial_report(&int(1), &int(1), &int(-4));
        assert!(!r.failed());
        assert!(r.checks[1].note.as_ref().unwrap().contains("s = 1/2"));
        let r = radial_report(&int(1), &int(1), &int(4));
        assert!(r.failed());
    }

    #[test]
    fn mismatch_is_not_silent() {
        assert!(match_q11(&Polynomial::from_ints(&[1, 2, 3, 4])).is_err());
        let r = linear_report(&rat(1, 2));
        assert!(!r.failed());
    }
}
