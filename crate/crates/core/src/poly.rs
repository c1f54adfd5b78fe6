//! Univariate polynomials with exact rational coefficients.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{binomial, fmt_rational, int, to_f64, Rational};

/// Dense polynomial, lowest power first. Trailing zeros are always stripped,
/// so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Polynomial::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, power: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); power + 1];
        coeffs[power] = c;
        Polynomial::new(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^power` (zero beyond the degree).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `"degree n"`, or `"zero polynomial"`.
    pub fn describe_degree(degree: Option<usize>) -> String {
        degree.map_or_else(|| "zero polynomial".into(), |d| format!("degree {d}"))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + to_f64(c))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// `p(a x + b)`.
    pub fn compose_affine(&self, a: &Rational, b: &Rational) -> Self {
        let inner = Polynomial::new(vec![b.clone(), a.clone()]);
        self.coeffs.iter().rev().fold(Polynomial::zero(), |acc, c| {
            &(&acc * &inner) + &Polynomial::constant(c.clone())
        })
    }

    /// `p(x + b)`.
    pub fn shift(&self, b: &Rational) -> Self {
        self.compose_affine(&Rational::one(), b)
    }

    /// `f(x) = g(x) - g(x - 1)`.
    pub fn forward_difference(&self) -> Self {
        self - &self.shift(&int(-1))
    }

    /// The unique `g` with `g(x) - g(x - 1) = f(x)` and `g(0) = 0`.
    pub fn antidifference(&self) -> Self {
        let Some(deg) = self.degree() else {
            return Polynomial::zero();
        };
        let mut residual = self.clone();
        let mut g = vec![Rational::zero(); deg + 2];
        // Top-down triangular solve: x^k - (x-1)^k has leading term k x^(k-1).
        for k in (1..=deg + 1).rev() {
            let b = residual.coeff(k - 1) / int(k as i64);
            if b.is_zero() {
                continue;
            }
            residual = &residual - &backward_difference_of_power(k).scale(&b);
            g[k] = b;
        }
        debug_assert!(residual.is_zero());
        Polynomial::new(g)
    }

    /// Exact Newton interpolation through `points`; degree < `points.len()`.
    pub fn interpolate(points: &[(Rational, Rational)]) -> Result<Self> {
        for (i, (xi, _)) in points.iter().enumerate() {
            if points[..i].iter().any(|(xj, _)| xj == xi) {
                return Err(Error::DuplicateAbscissa(xi.clone()));
            }
        }
        let n = points.len();
        let mut table: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        // Horner on the Newton form.
        let mut p = Polynomial::zero();
        for i in (0..n).rev() {
            let factor = Polynomial::new(vec![-points[i].0.clone(), Rational::one()]);
            p = &(&p * &factor) + &Polynomial::constant(table[i].clone());
        }
        Ok(p)
    }

    /// All distinct rational roots, ascending, by the rational root theorem.
    pub fn rational_roots(&self) -> Vec<Rational> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| num_integer::Integer::lcm(&acc, c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * &lcm).to_integer()).collect();
        let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
        let mut roots = Vec::new();
        if low > 0 {
            roots.push(Rational::zero());
        }
        for p in divisors(&ints[low]) {
            for q in divisors(&ints[deg]) {
                for sign in [1, -1] {
                    let x = Rational::new(&p * BigInt::from(sign), q.clone());
                    if !roots.contains(&x) && self.eval(&x).is_zero() {
                        roots.push(x);
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }
}

/// Positive divisors of a nonzero integer, by trial division.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let pair = &n / &d;
            if pair != d {
                large.push(pair);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `x^k - (x - 1)^k`.
fn backward_difference_of_power(k: usize) -> Polynomial {
    let mut coeffs = vec![Rational::zero(); k];
    for (i, c) in coeffs.iter_mut().enumerate() {
        // -(C(k,i) (-1)^(k-i))
        let b = Rational::from_integer(binomial(k as u64, i as u64));
        *c = if (k - i).is_multiple_of(2) { -b } else { b };
    }
    Polynomial::new(coeffs)
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag == Rational::one();
            match power {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{power}")?,
                _ => write!(f, "{mag}x^{power}")?,
            }
        }
        Ok(())
    }
}

/// JSON form: coefficient strings, lowest power first.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}

impl From<BigInt> for Polynomial {
    fn from(c: BigInt) -> Self {
        Polynomial::constant(Rational::from_integer(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_ints(c)
    }

    #[test]
    fn rational_roots_found() {
        // (x - 1/2)(x + 3)(3x - 2) x
        let q = &(&p(&[-1, 2]) * &p(&[3, 1])) * &(&p(&[-2, 3]) * &p(&[0, 1]));
        assert_eq!(q.rational_roots(), vec![int(-3), int(0), rat(1, 2), rat(2, 3)]);
        assert!(p(&[-2, 0, 1]).rational_roots().is_empty());
        assert!(Polynomial::zero().rational_roots().is_empty());
        assert_eq!(p(&[5]).rational_roots(), Vec::<Rational>::new());
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[0, 2]).eval(&int(3)), int(6));
        assert_eq!(Polynomial::zero().eval(&rat(7, 2)), int(0));
        assert_eq!(p(&[0, 2, 3]).eval(&rat(-1, 4)), rat(-5, 16));
    }

    #[test]
    fn trailing_zeros_stripped() {
        let q = p(&[1, 2, 0, 0]);
        assert_eq!(q.degree(), Some(1));
        assert_eq!(p(&[0, 0]).degree(), None);
        assert!(p(&[0]).coeffs().is_empty());
    }

    #[test]
    fn forward_difference_examples() {
        assert_eq!(p(&[0, 1, 1]).forward_difference(), p(&[0, 2]));
        assert_eq!(p(&[0, 0, 0, 1]).forward_difference(), p(&[1, -3, 3]));
        assert!(p(&[5]).forward_difference().is_zero());
    }

    #[test]
    fn antidifference_examples() {
        assert_eq!(p(&[0, 2]).antidifference(), p(&[0, 1, 1]));
        assert_eq!(p(&[1]).antidifference(), p(&[0, 1]));
        let g = p(&[0, 2, 3]).antidifference();
        assert_eq!(g, Polynomial::new(vec![int(0), rat(3, 2), rat(5, 2), int(1)]));
        assert_eq!(g.forward_difference(), p(&[0, 2, 3]));
    }

    #[test]
    fn antidifference_matches_partial_sums() {
        // Oracle: g(n) = f(1) + ... + f(n) for n >= 0.
        let f = Polynomial::new(vec![rat(-2, 3), int(4), rat(1, 5), int(-7), rat(3, 2)]);
        let g = f.antidifference();
        let mut sum = Rational::zero();
        for n in 0..12 {
            if n > 0 {
                sum += f.eval(&int(n));
            }
            assert_eq!(g.eval(&int(n)), sum, "n = {n}");
        }
    }

    #[test]
    fn interpolate_examples() {
        let pts = |v: &[(i64, i64)]| -> Vec<(Rational, Rational)> {
            v.iter().map(|&(x, y)| (int(x), int(y))).collect()
        };
        assert_eq!(
            Polynomial::interpolate(&pts(&[(0, 0), (1, 2), (2, 4)])).unwrap(),
            p(&[0, 2])
        );
        let cubic = Polynomial::interpolate(&pts(&[(-1, -1), (0, 0), (1, 1), (2, 8)])).unwrap();
        assert_eq!(cubic.eval(&int(2)), int(8));
        assert_eq!(cubic.eval(&int(1)), int(1));
        assert_eq!(cubic, p(&[0, 0, 0, 1]));
        assert_eq!(
            Polynomial::interpolate(&[(int(5), rat(7, 3))]).unwrap(),
            Polynomial::constant(rat(7, 3))
        );
        assert_eq!(
            Polynomial::interpolate(&pts(&[(1, 2), (1, 3)])),
            Err(Error::DuplicateAbscissa(int(1)))
        );
    }

    #[test]
    fn display_and_json() {
        let q = Polynomial::new(vec![rat(-1, 2), int(0), int(-3), int(1)]);
        assert_eq!(q.to_string(), "x^3 - 3x^2 - 1/2");
        assert_eq!(serde_json::to_string(&q).unwrap(), r#"["-1/2","0","-3","1"]"#);
    }

    #[test]
    fn affine_composition() {
        // (x+1)^2 at 2x - 1 -> 4x^2
        let q = p(&[1, 2, 1]).compose_affine(&int(2), &int(-1));
        assert_eq!(q, p(&[0, 0, 4]));
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_poly(max_len: usize) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(arb_rational(), 0..max_len).prop_map(Polynomial::new)
    }

    proptest! {
        #[test]
        fn antidifference_inverts_difference(tail in arb_poly(8)) {
            // g(0) = 0 by construction: g = x * tail.
            let g = &Polynomial::x() * &tail;
            prop_assert_eq!(g.forward_difference().antidifference(), g);
        }

        #[test]
        fn difference_lowers_degree(g in arb_poly(9)) {
            if let Some(d) = g.degree() {
                if d >= 1 {
                    prop_assert_eq!(g.forward_difference().degree(), Some(d - 1));
                }
            }
        }

        #[test]
        fn interpolation_reproduces_points(ys in proptest::collection::vec(arb_rational(), 1..8), x0 in -5i64..5) {
            let pts: Vec<_> = ys.iter().enumerate().map(|(i, y)| (rat(x0 * 3 + 2 * i as i64, 3), y.clone())).collect();
            let q = Polynomial::interpolate(&pts).unwrap();
            prop_assert!(q.degree().is_none_or(|d| d < pts.len()));
            for (x, y) in &pts {
                prop_assert_eq!(&q.eval(x), y);
            }
        }
    }
}
