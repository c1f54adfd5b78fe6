//! Recipes: Lie building blocks on truncated Fock spaces, abstract irreps, and
//! compositions of two recipes restricted to a fixed-`Π` sector.
//!
//! Each building block is cut down to its own charge sector before it is
//! tensored with the other factor. The joint charge sector of the product
//! space is the product of the factor sectors, so this gives the same
//! matrices as extracting it from the full multi-mode space, on a much
//! smaller basis.

use std::fmt;
use std::str::FromStr;

use num_traits::Signed;

use crate::algebra::{build_irrep_exact, su2_label, truncated_verma, PolyAlgebra};
use crate::catalog::q11::{is_valid_k, q11_algebra_for, q11_irrep_exact};
use crate::composer::{compose_tensor, required_samples, structure_polynomial_of, StructureFit, Variant};
use crate::error::{Error, Result};
use crate::fock::{schwinger_build, FockSpace, Kind, Sector};
use crate::poly::Polynomial;
use crate::rational::{int, is_half_integer, parse_rational, Rational};
use crate::triple::GeneratorTriple;

#[derive(Debug, Clone, PartialEq)]
pub enum Recipe {
    /// Two-mode Schwinger `su(2)` at spin `j`.
    Su2 { j: Rational },
    /// Two-mode `su(1,1)` at Bargmann index `k`; infinite, cut by `n_max`.
    Su11 { k: Rational },
    /// One boson mode `(N, a†, a)`, cut by `n_max`.
    Heisenberg,
    /// The first `size` states of the `su(1,1)` module with lowest weight `k`.
    Su11Verma { k: Rational, size: usize },
    /// Abstract spin-`j` irrep of `su(2)`, weighted flavor.
    Su2Irrep { j: Rational },
    /// The `(k, l)` representation of `Q⁻(1,1)`, weighted flavor.
    Q11Irrep { k: Rational, l: Rational },
    /// One-dimensional `D = 0`, `R = L = 0`.
    Trivial,
    Compose {
        left: Box<Recipe>,
        right: Box<Recipe>,
        variant: Variant,
        pi: Rational,
    },
}

/// A built recipe: the triple, the algebra it realizes and, for compositions,
/// how that algebra was recovered.
#[derive(Debug, Clone)]
pub struct Built {
    pub triple: GeneratorTriple<Rational>,
    pub algebra: PolyAlgebra,
    /// Order of the realized algebra (for compositions, the derived degree).
    pub order: usize,
    pub composed: Option<Composed>,
}

#[derive(Debug, Clone)]
pub struct Composed {
    pub fit: StructureFit,
    /// Orders `(m, n)` of the two inputs.
    pub inputs: (usize, usize),
}

impl Composed {
    pub fn required_samples(&self) -> usize {
        required_samples(self.inputs.0, self.inputs.1)
    }

    pub fn enough_samples(&self) -> bool {
        self.fit.sample_count() >= self.required_samples()
    }
}

impl Built {
    fn block(triple: GeneratorTriple<Rational>, algebra: PolyAlgebra) -> Self {
        let order = algebra.order();
        Built { triple, algebra, order, composed: None }
    }
}

impl Recipe {
    pub fn compose(left: Recipe, right: Recipe, variant: Variant, pi: Rational) -> Recipe {
        Recipe::Compose { left: Box::new(left), right: Box::new(right), variant, pi }
    }

    pub fn build(&self, n_max: u32) -> Result<Built> {
        match self {
            Recipe::Su2 { j } => {
                check_spin(j)?;
                fock_block(2, Kind::Su2(0, 1), Some(j), n_max)
            }
            Recipe::Su11 { k } => {
                check_k(k)?;
                fock_block(2, Kind::Su11(0, 1), Some(k), n_max)
            }
            Recipe::Heisenberg => fock_block(1, Kind::Heisenberg(0), None, n_max),
            Recipe::Su11Verma { k, size } => {
                check_k(k)?;
                if *size == 0 {
                    return Err(Error::InvalidLabel("module size must be positive".into()));
                }
                let alg = PolyAlgebra::su11();
                Ok(Built::block(truncated_verma(&alg, k, *size), alg))
            }
            Recipe::Su2Irrep { j } => {
                check_spin(j)?;
                let alg = PolyAlgebra::su2();
                Ok(Built::block(build_irrep_exact(&alg, &su2_label(j))?, alg))
            }
            Recipe::Q11Irrep { k, l } => {
                Ok(Built::block(q11_irrep_exact(k, l)?, q11_algebra_for(k, l)))
            }
            Recipe::Trivial => Ok(Built::block(
                GeneratorTriple::trivial(int(0)),
                PolyAlgebra::new(Polynomial::zero()),
            )),
            Recipe::Compose { left, right, variant, pi } => {
                let (l, r) = (left.build(n_max)?, right.build(n_max)?);
                let comp = compose_tensor(&l.triple, &r.triple, *variant)?;
                let sector = comp.pi_sector(pi.clone())?;
                let fit = structure_polynomial_of(&comp, &sector)?;
                let triple = comp.sector_triple(&sector)?;
                let algebra = PolyAlgebra::new(fit.polynomial.clone());
                Ok(Built {
                    triple,
                    order: algebra.order(),
                    algebra,
                    composed: Some(Composed { fit, inputs: (l.order, r.order) }),
                })
            }
        }
    }
}

fn check_spin(j: &Rational) -> Result<()> {
    if is_half_integer(j) && !j.is_negative() {
        Ok(())
    } else {
        Err(Error::InvalidLabel(format!("spin j = {j} must be a nonnegative half-integer")))
    }
}

fn check_k(k: &Rational) -> Result<()> {
    if is_valid_k(k) {
        Ok(())
    } else {
        Err(Error::InvalidLabel(format!("k = {k} must be one of 1/2, 1, 3/2, ...")))
    }
}

/// A Schwinger block restricted to a fixed value of its charge.
fn fock_block(modes: usize, kind: Kind, label: Option<&Rational>, n_max: u32) -> Result<Built> {
    let space = FockSpace::new(modes, n_max);
    let real = schwinger_build::<Rational>(&space, kind, "label")?;
    let triple = match label {
        Some(value) => {
            let t = &real.triple;
            let (ud, du) = (&t.r * &t.l, &t.l * &t.r);
            let sector = Sector::extract(&[(&real.charges[0], value.clone())], &[&ud, &du])?;
            if sector.is_empty() {
                return Err(Error::EmptySector);
            }
            t.restrict(&sector.indices)?
        }
        None => real.triple,
    };
    Ok(Built::block(triple, kind.algebra()))
}

/// Operand syntax: `su2:j=2`, `su11:k=1/2`, `su11:k=1/2,n=12`, `heis`,
/// `su2-irrep:j=3/2`, `q11:k=1/2,l=13/4`, `trivial`.
impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, args) = s.split_once(':').unwrap_or((s, ""));
        let mut params = std::collections::BTreeMap::new();
        for pair in args.split(',').filter(|p| !p.trim().is_empty()) {
            let (key, value) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in '{pair}'")))?;
            params.insert(key.trim().to_string(), value.trim().to_string());
        }
        let take = |key: &str| -> Result<Rational> {
            let raw = params
                .get(key)
                .ok_or_else(|| Error::Parse(format!("operand '{s}' needs {key}=...")))?;
            parse_rational(raw)
        };
        let recipe = match kind.trim() {
            "su2" => Recipe::Su2 { j: take("j")? },
            "su2-irrep" => Recipe::Su2Irrep { j: take("j")? },
            "su11" if params.contains_key("n") => {
                let size = take("n")?;
                let size = usize::try_from(size.to_integer())
                    .ok()
                    .filter(|_| size.is_integer())
                    .ok_or_else(|| Error::Parse(format!("n = {size} must be a positive integer")))?;
                Recipe::Su11Verma { k: take("k")?, size }
            }
            "su11" => Recipe::Su11 { k: take("k")? },
            "heis" | "heisenberg" => Recipe::Heisenberg,
            "q11" => Recipe::Q11Irrep { k: take("k")?, l: take("l")? },
            "trivial" => Recipe::Trivial,
            other => return Err(Error::Parse(format!("unknown operand kind '{other}'"))),
        };
        Ok(recipe)
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Su2 { j } => write!(f, "su2:j={j}"),
            Recipe::Su11 { k } => write!(f, "su11:k={k}"),
            Recipe::Heisenberg => write!(f, "heis"),
            Recipe::Su11Verma { k, size } => write!(f, "su11:k={k},n={size}"),
            Recipe::Su2Irrep { j } => write!(f, "su2-irrep:j={j}"),
            Recipe::Q11Irrep { k, l } => write!(f, "q11:k={k},l={l}"),
            Recipe::Trivial => write!(f, "trivial"),
            Recipe::Compose { left, right, variant, pi } => {
                let v = match variant {
                    Variant::Plus => "plus",
                    Variant::Cross => "cross",
                };
                write!(f, "({left}) {v} ({right}) at Pi={pi}")
            }
        }
    }
}
