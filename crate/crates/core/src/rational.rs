//! Exact rationals and signed square roots of rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

use crate::error::{Error, Result};

/// Arbitrary-precision fraction, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or an integer. Decimal floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("'{s}' is not a rational of the form p/q or an integer"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("'{s}' has a zero denominator")));
    }
    Ok(Rational::new(num, den))
}

/// `[a, b, ...]` with canonical entries.
pub fn fmt_list(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(fmt_rational).collect();
    format!("[{}]", parts.join(", "))
}

/// Canonical string: `"p/q"`, or `"p"` for integers.
pub fn fmt_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_integer(r: &Rational) -> bool {
    r.is_integer()
}

pub fn is_half_integer(r: &Rational) -> bool {
    (r * int(2)).is_integer()
}

/// Exact square root if `r` is the square of a rational.
pub fn exact_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Serde helper for rationals as canonical strings.
pub fn serialize_rational<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(r))
}

/// A signed square root `±sqrt(square)` of a nonnegative rational.
///
/// Matrix elements of unitary representations are of this form; the square is
/// always exact even when the root itself is irrational.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    negative: bool,
    square: Rational,
}

impl Surd {
    pub fn zero() -> Self {
        Surd { negative: false, square: Rational::zero() }
    }

    /// `sign(sign) * sqrt(square)`; panics if `square` is negative.
    pub fn new(negative: bool, square: Rational) -> Self {
        assert!(!square.is_negative(), "surd of a negative rational");
        let negative = negative && !square.is_zero();
        Surd { negative, square }
    }

    /// The surd equal to `coeff * sqrt(ratio)`.
    pub fn scaled_root(coeff: &Rational, ratio: &Rational) -> Self {
        Surd::new(coeff.is_negative(), coeff * coeff * ratio)
    }

    pub fn is_zero(&self) -> bool {
        self.square.is_zero()
    }

    /// The signed square `sign * value^2`; exact.
    pub fn signed_square(&self) -> Rational {
        if self.negative {
            -self.square.clone()
        } else {
            self.square.clone()
        }
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    /// The value itself when it is rational.
    pub fn exact(&self) -> Option<Rational> {
        exact_sqrt(&self.square).map(|r| if self.negative { -r } else { r })
    }

    pub fn to_f64(&self) -> f64 {
        let v = to_f64(&self.square).sqrt();
        if self.negative {
            -v
        } else {
            v
        }
    }
}

impl fmt::Display for Surd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exact() {
            Some(r) => write!(f, "{r}"),
            None => write!(f, "{}sqrt({})", if self.negative { "-" } else { "" }, self.square),
        }
    }
}

impl Serialize for Surd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
