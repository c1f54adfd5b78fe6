//! Polynomial deformations of `su(2)` and `su(1,1)`.
//!
//! An algebra here is three generators with `[N0, N±] = ±N±` and
//! `[N+, N-] = f(N0)` for a polynomial `f`. The crate derives Casimir operators
//! and finite-dimensional irreps from `f`, realizes the quadratic and cubic
//! algebras on truncated bosonic Fock spaces, composes realizations the
//! Jordan–Schwinger way, and checks everything with exact rational matrices.
//!
//! Module map:
//!
//! * [`poly`], [`rational`]: exact arithmetic, finite differences, interpolation
//! * [`algebra`], [`triple`], [`verify`]: Casimirs, irreps, realization checks
//! * [`fock`]: Fock spaces, Schwinger builders, charge sectors
//! * [`composer`]: composition and the order `m + n + 1` check
//! * [`catalog`]: the classified quadratic/cubic algebras and applications
//! * [`bargmann`]: differential-operator realization of `Q(1,1)`
//! * [`cli`], [`report`]: the batch driver and its JSON reports

pub mod algebra;
pub mod bargmann;
pub mod catalog;
pub mod cli;
pub mod composer;
pub mod error;
pub mod fock;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod report;
pub mod triple;
pub mod verify;

pub use algebra::{casimir_from_structure, CasimirSpec, IrrepLabel, PolyAlgebra};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use poly::Polynomial;
pub use rational::Rational;
pub use triple::{Flavor, GeneratorTriple};
pub use verify::{verify_realization, Check, Status, VerificationReport};
