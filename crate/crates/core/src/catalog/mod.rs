//! The classified quadratic and cubic algebras, plus the worked examples and
//! applications that accompany them.
//!
//! Every classified entry is built from its composition recipe; the printed
//! commutator is only a cross-check. Coefficients that involve constants
//! with no stated value are recorded as measured rather than compared.

pub mod calogero;
pub mod oscillator;
pub mod q11;
pub mod recipe;
pub mod susy;

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::PolyAlgebra;
use crate::composer::{verify_order_theorem, Variant};
use crate::error::{Error, Result};
use crate::rational::{fmt_rational, int, rat, Rational};
use crate::report::{EntryReport, PrintedPolynomial};
use crate::triple::{GeneratorTriple, TripleExport};
use crate::verify::{verify_realization, Check, Status};

use q11::{q11_algebra, su11_casimir_value};
use recipe::{Built, Recipe};

pub type Constants = BTreeMap<String, Rational>;

/// A printed structure polynomial, lowest power first.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedForm {
    pub label: &'static str,
    pub coeffs: Vec<Option<Rational>>,
}

/// One classified algebra.
pub struct CatalogEntry {
    /// Stable identifier used on the command line.
    pub slug: &'static str,
    pub name: &'static str,
    /// The composition recipe, as operator definitions.
    pub recipe: &'static str,
    pub degree: usize,
    /// Constants a caller may override.
    pub inputs: &'static [&'static str],
    defaults: fn() -> Constants,
    derive: fn(&mut Constants),
    build: fn(&Constants) -> Recipe,
    printed: fn(&Constants) -> Vec<PrintedForm>,
}

impl std::fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CatalogEntry").field("slug", &self.slug).field("name", &self.name).finish()
    }
}

fn c(map: &Constants, key: &str) -> Rational {
    map.get(key).cloned().unwrap_or_else(|| panic!("constant {key} missing"))
}

fn consts(pairs: &[(&str, Rational)]) -> Constants {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn casimir_j(j: &Rational) -> Rational {
    j * (j + int(1))
}

fn derive_spin(m: &mut Constants) {
    let j = c(m, "j");
    m.insert("J".into(), casimir_j(&j));
}

fn derive_k(m: &mut Constants) {
    let k = c(m, "k");
    m.insert("C1".into(), su11_casimir_value(&k));
}

fn derive_q11(m: &mut Constants) {
    let k = c(m, "k");
    m.insert("K".into(), su11_casimir_value(&k));
}

fn derive_spin_k(m: &mut Constants) {
    derive_spin(m);
    derive_k(m);
}

fn no_derived(_: &mut Constants) {}

fn some(r: Rational) -> Option<Rational> {
    Some(r)
}

fn su2(m: &Constants, key: &str) -> Recipe {
    Recipe::Su2 { j: c(m, key) }
}

fn su11(m: &Constants, key: &str) -> Recipe {
    Recipe::Su11 { k: c(m, key) }
}

/// `Q∓(1,1)` built from `su(1,1)` and one boson, used as a factor of the
/// last four cubic rows.
fn q11_factor(m: &Constants, variant: Variant) -> Recipe {
    Recipe::compose(su11(m, "k"), Recipe::Heisenberg, variant, c(m, "L"))
}

/// The classified quadratic and cubic algebras, in table order.
pub fn entries() -> &'static [CatalogEntry] {
    &ENTRIES
}

static ENTRIES: [CatalogEntry; 14] = [
    CatalogEntry {
        slug: "q2-minus",
        name: "Q−(2)",
        recipe: "Q0 = (J0 - N)/2, Q+ = J+ a, Q- = J- a†; L = (J0 + N)/2",
        degree: 2,
        inputs: &["j", "L"],
        defaults: || consts(&[("j", int(2)), ("L", int(1))]),
        derive: derive_spin,
        build: |m| Recipe::compose(su2(m, "j"), Recipe::Heisenberg, Variant::Cross, c(m, "L")),
        printed: |m| {
            let (j, l) = (c(m, "J"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![some(&j + &l * (&l + int(1))), some(-(&l * int(2) - int(1))), some(int(-3))],
            }]
        },
    },
    CatalogEntry {
        slug: "q2-plus",
        name: "Q+(2)",
        recipe: "Q0 = (J0 + N)/2, Q+ = J+ a†, Q- = J- a; L = (J0 - N)/2",
        degree: 2,
        inputs: &["j", "L"],
        defaults: || consts(&[("j", int(2)), ("L", int(-1))]),
        derive: derive_spin,
        build: |m| Recipe::compose(su2(m, "j"), Recipe::Heisenberg, Variant::Plus, c(m, "L")),
        printed: |m| {
            let (j, l) = (c(m, "J"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![some(-(&j + &l * (&l - int(1)))), some(&l * int(2) + int(1)), some(int(-3))],
            }]
        },
    },
    CatalogEntry {
        slug: "q11-minus",
        name: "Q−(1,1)",
        recipe: "Q0 = (K0 - N)/2, Q+ = K+ a, Q- = K- a†; L = (K0 + N)/2",
        degree: 2,
        inputs: &["k", "L"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(9, 4))]),
        derive: derive_q11,
        build: |m| q11_factor(m, Variant::Cross),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![
                PrintedForm {
                    label: "table",
                    coeffs: vec![some(&k + &l * (&l + int(1))), some(-(&l * int(2) - int(1))), some(int(3))],
                },
                PrintedForm {
                    label: "worked-example",
                    coeffs: vec![some(int(0)), some(&l * int(2) - int(1)), some(int(3))],
                },
            ]
        },
    },
    CatalogEntry {
        slug: "q11-plus",
        name: "Q+(1,1)",
        recipe: "Q0 = (K0 + N)/2, Q+ = K+ a†, Q- = K- a; L = (K0 - N)/2",
        degree: 2,
        inputs: &["k", "L"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(1, 4))]),
        derive: derive_q11,
        build: |m| q11_factor(m, Variant::Plus),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![some(&k + &l * (&l + int(1))), some(-(&l * int(2) - int(1))), some(int(-3))],
            }]
        },
    },
    CatalogEntry {
        slug: "c1111-minus",
        name: "C−(11,11)",
        recipe: "C0 = (L0 - M0)/2, C+ = mu L+ M-, C- = L- M+; K = (L0 + M0)/2; mu = 1",
        degree: 3,
        inputs: &["k1", "k2", "K"],
        defaults: || consts(&[("k1", rat(1, 2)), ("k2", rat(1, 2)), ("K", int(3))]),
        derive: no_derived,
        build: |m| Recipe::compose(su11(m, "k1"), su11(m, "k2"), Variant::Cross, c(m, "K")),
        printed: |_| vec![PrintedForm { label: "table", coeffs: vec![None, None, some(int(0)), some(int(-4))] }],
    },
    CatalogEntry {
        slug: "c1111-plus",
        name: "C+(11,11)",
        recipe: "C0 = (L0 + M0)/2, C+ = L+ M+, C- = M- L-; K = (L0 - M0)/2",
        degree: 3,
        inputs: &["k1", "k2", "K"],
        defaults: || consts(&[("k1", rat(1, 2)), ("k2", rat(1, 2)), ("K", int(0))]),
        derive: no_derived,
        build: |m| Recipe::compose(su11(m, "k1"), su11(m, "k2"), Variant::Plus, c(m, "K")),
        printed: |_| vec![PrintedForm { label: "table", coeffs: vec![None, None, some(int(0)), some(int(-4))] }],
    },
    CatalogEntry {
        slug: "c22-minus",
        name: "C−(2,2)",
        recipe: "C0 = (J0 - P0)/2, C+ = J+ P-, C- = J- P+; K = (J0 + P0)/2",
        degree: 3,
        inputs: &["j1", "j2", "K"],
        defaults: || consts(&[("j1", int(2)), ("j2", int(2)), ("K", int(0))]),
        derive: no_derived,
        build: |m| Recipe::compose(su2(m, "j1"), su2(m, "j2"), Variant::Cross, c(m, "K")),
        printed: |_| vec![PrintedForm { label: "table", coeffs: vec![None, None, some(int(0)), some(int(4))] }],
    },
    CatalogEntry {
        slug: "c22-plus",
        name: "C+(2,2)",
        recipe: "C0 = (J0 + P0)/2, C+ = J+ P+, C- = J- P-; K = (J0 - P0)/2",
        degree: 3,
        inputs: &["j1", "j2", "K"],
        defaults: || consts(&[("j1", int(2)), ("j2", int(2)), ("K", int(0))]),
        derive: no_derived,
        build: |m| Recipe::compose(su2(m, "j1"), su2(m, "j2"), Variant::Plus, c(m, "K")),
        printed: |_| vec![PrintedForm { label: "table", coeffs: vec![None, None, some(int(0)), some(int(4))] }],
    },
    CatalogEntry {
        slug: "c211-minus",
        name: "C−(2,11)",
        recipe: "C0 = (J0 - L0)/2, C+ = J+ L-, C- = J- L+; K = (J0 + L0)/2",
        degree: 3,
        inputs: &["j", "k", "K"],
        defaults: || consts(&[("j", int(2)), ("k", rat(1, 2)), ("K", rat(5, 4))]),
        derive: derive_spin_k,
        build: |m| Recipe::compose(su2(m, "j"), su11(m, "k"), Variant::Cross, c(m, "K")),
        printed: |m| {
            let (j, c1, k) = (c(m, "J"), c(m, "C1"), c(m, "K"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![some((&j + &c1) * int(2)), some(int(-4) * &k * &k), some(int(0)), some(int(4))],
            }]
        },
    },
    CatalogEntry {
        slug: "c211-plus",
        name: "C+(2,11)",
        recipe: "C0 = (J0 + L0)/2, C+ = J+ L+, C- = J- L-; K = (J0 - L0)/2",
        degree: 3,
        inputs: &["j", "k", "K"],
        defaults: || consts(&[("j", int(2)), ("k", rat(1, 2)), ("K", rat(-5, 4))]),
        derive: derive_spin_k,
        build: |m| Recipe::compose(su2(m, "j"), su11(m, "k"), Variant::Plus, c(m, "K")),
        printed: |m| {
            let (j, c1, k) = (c(m, "J"), c(m, "C1"), c(m, "K"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![some((&j - &c1) * int(2)), some(int(-4) * &k * &k), some(int(0)), some(int(4))],
            }]
        },
    },
    CatalogEntry {
        slug: "cqm-h-plus",
        name: "C+(q−1,h)",
        recipe: "C0 = (Q0 + N)/2, C+ = Q+ a†, C- = Q- a; K = (Q0 - N)/2; Q from Q−(1,1)",
        degree: 3,
        inputs: &["k", "L", "K"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(9, 4)), ("K", rat(-7, 8))]),
        derive: derive_k,
        build: |m| Recipe::compose(q11_factor(m, Variant::Cross), Recipe::Heisenberg, Variant::Plus, c(m, "K")),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![None, None, some(-(int(6) * &k * &k + int(3) * (&l + int(1)))), some(int(-4))],
            }]
        },
    },
    CatalogEntry {
        slug: "cqm-h-minus",
        name: "C−(q−1,h)",
        recipe: "C0 = (Q0 - N)/2, C+ = Q+ a, C- = Q- a†; K = (Q0 + N)/2; Q from Q−(1,1)",
        degree: 3,
        inputs: &["k", "L", "K"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(9, 4)), ("K", rat(9, 8))]),
        derive: derive_k,
        build: |m| Recipe::compose(q11_factor(m, Variant::Cross), Recipe::Heisenberg, Variant::Cross, c(m, "K")),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![None, None, some(-(int(6) * &k - &l - int(2))), some(int(4))],
            }]
        },
    },
    CatalogEntry {
        slug: "cqp-h-plus",
        name: "C+(q+1,h)",
        recipe: "C0 = (Q0 + N)/2, C+ = Q+ a†, C- = Q- a; K = (Q0 - N)/2; Q from Q+(1,1)",
        degree: 3,
        inputs: &["k", "L", "K"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(1, 4)), ("K", rat(1, 8))]),
        derive: derive_k,
        build: |m| Recipe::compose(q11_factor(m, Variant::Plus), Recipe::Heisenberg, Variant::Plus, c(m, "K")),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![None, None, some(-(int(6) * &k + int(3) * &l)), some(int(-4))],
            }]
        },
    },
    CatalogEntry {
        slug: "cqp-h-minus",
        name: "C−(q+1,h)",
        recipe: "C0 = (Q0 - N)/2, C+ = Q+ a, C- = Q- a†; K = (Q0 + N)/2; Q from Q+(1,1)",
        degree: 3,
        inputs: &["k", "L", "K"],
        defaults: || consts(&[("k", rat(1, 2)), ("L", rat(1, 4)), ("K", rat(17, 8))]),
        derive: derive_k,
        build: |m| Recipe::compose(q11_factor(m, Variant::Plus), Recipe::Heisenberg, Variant::Cross, c(m, "K")),
        printed: |m| {
            let (k, l) = (c(m, "K"), c(m, "L"));
            vec![PrintedForm {
                label: "table",
                coeffs: vec![None, None, some(-(int(6) * &k - int(6) * &l - int(2))), some(int(4))],
            }]
        },
    },
];

/// Looks an entry up by slug or display name.
pub fn find_entry(name: &str) -> Result<&'static CatalogEntry> {
    entries()
        .iter()
        .find(|e| e.slug == name || e.name == name)
        .ok_or_else(|| Error::UnknownEntry(name.to_string()))
}

impl CatalogEntry {
    /// Defaults overridden by `overrides`, then the derived constants.
    pub fn constants(&self, overrides: &Constants) -> Result<Constants> {
        let mut m = (self.defaults)();
        for (k, v) in overrides {
            if !m.contains_key(k) {
                return Err(Error::Parse(format!(
                    "{} takes constants {:?}, not '{k}'",
                    self.slug, self.inputs
                )));
            }
            m.insert(k.clone(), v.clone());
        }
        (self.derive)(&mut m);
        Ok(m)
    }

    pub fn recipe_for(&self, constants: &Constants) -> Recipe {
        (self.build)(constants)
    }

    pub fn printed_forms(&self, constants: &Constants) -> Vec<PrintedForm> {
        (self.printed)(constants)
    }
}

/// A built entry: constants, recipe and the sector realization.
#[derive(Debug, Clone)]
pub struct EntryBuild {
    pub entry: &'static CatalogEntry,
    pub constants: Constants,
    pub recipe: Recipe,
    pub built: Built,
}

impl EntryBuild {
    pub fn triple(&self) -> &GeneratorTriple<Rational> {
        &self.built.triple
    }

    pub fn algebra(&self) -> &PolyAlgebra {
        &self.built.algebra
    }

    fn has_enough_samples(&self) -> bool {
        self.built.composed.as_ref().is_some_and(|c| c.enough_samples())
    }
}

fn build_unchecked(name: &str, overrides: &Constants, n_max: u32) -> Result<EntryBuild> {
    let entry = find_entry(name)?;
    let constants = entry.constants(overrides)?;
    let recipe = entry.recipe_for(&constants);
    let built = recipe.build(n_max)?;
    Ok(EntryBuild { entry, constants, recipe, built })
}

/// Builds an entry on the sector fixed by its constants and derives its
/// structure polynomial.
///
/// A degree different from the classified one is an error whenever the
/// sector offers enough interpolation points to pin the degree down.
pub fn build_entry(name: &str, overrides: &Constants, n_max: u32) -> Result<EntryBuild> {
    let b = build_unchecked(name, overrides, n_max)?;
    let derived = b.built.algebra.f.degree();
    if b.has_enough_samples() && derived != Some(b.entry.degree) {
        return Err(Error::DegreeMismatch { expected: b.entry.degree, derived });
    }
    Ok(b)
}

/// Compares a printed form against the derived coefficients.
pub fn compare_printed(form: &PrintedForm, derived: &crate::poly::Polynomial) -> Check {
    let top = form.coeffs.len().max(derived.coeffs().len());
    let mut mismatches = Vec::new();
    let mut unknown = Vec::new();
    for power in 0..top {
        let got = derived.coeff(power);
        match form.coeffs.get(power) {
            Some(Some(want)) if *want != got => mismatches.push(format!(
                "x^{power}: printed {}, derived {}",
                fmt_rational(want),
                fmt_rational(&got)
            )),
            Some(None) => unknown.push(format!("x^{power} = {}", fmt_rational(&got))),
            None if !got.is_zero() => mismatches.push(format!(
                "x^{power}: printed 0, derived {}",
                fmt_rational(&got)
            )),
            _ => {}
        }
    }
    let name = format!("printed-{}", form.label);
    let mut notes = Vec::new();
    if !mismatches.is_empty() {
        notes.push(mismatches.join("; "));
    }
    if !unknown.is_empty() {
        notes.push(format!("undefined constants, measured {}", unknown.join(", ")));
    }
    let status = if mismatches.is_empty() { Status::Pass } else { Status::DeviationDocumented };
    let check = Check::new(name, status, if mismatches.is_empty() { "0" } else { "n/a" });
    if notes.is_empty() {
        check
    } else {
        check.with_note(notes.join("; "))
    }
}

/// Full verification of one classified entry at `n_max`, with a stability
/// rebuild at `n_max + 4`.
pub fn verify_entry(name: &str, overrides: &Constants, n_max: u32) -> Result<EntryReport> {
    let b = build_unchecked(name, overrides, n_max)?;
    let entry = b.entry;
    let f = b.built.algebra.f.clone();
    let composed = b.built.composed.as_ref().expect("catalog entries are compositions");
    let (m, n) = composed.inputs;

    let mut report = EntryReport::new(entry.slug).with_constants(&b.constants).derived(&f);
    report.recipe = Some(entry.recipe.to_string());
    report.extend(verify_realization(&b.built.triple, &b.built.algebra, 0.0)?.checks);

    let samples = composed.fit.sample_count();
    let needed = composed.required_samples();
    let enough = samples >= needed;
    report.push(Check::new(
        "interpolation-points",
        if enough { Status::Pass } else { Status::InsufficientPoints },
        format!("{samples}/{needed}"),
    ));
    let degree = f.degree();
    let degree_check = if enough {
        Check::from_bool("degree", degree == Some(entry.degree), crate::poly::Polynomial::describe_degree(degree))
    } else {
        Check::new("degree", Status::InsufficientPoints, crate::poly::Polynomial::describe_degree(degree))
    };
    report.push(degree_check.with_note(format!("classified degree {}", entry.degree)));
    let verdict = verify_order_theorem(m, n, &f);
    report.push(
        Check::from_bool("order-theorem", verdict.holds && verdict.saturated, crate::poly::Polynomial::describe_degree(degree))
            .with_note(format!("inputs of order {m} and {n}, bound {}", verdict.bound)),
    );

    let again = b.recipe.build(n_max + 4)?;
    report.push(
        Check::from_bool("n-max-stability", again.algebra.f == f, "0")
            .with_note(format!("rebuilt at n_max = {}", n_max + 4)),
    );

    for form in entry.printed_forms(&b.constants) {
        report.printed.push(PrintedPolynomial {
            label: form.label.to_string(),
            coeffs: form.coeffs.iter().map(|c| c.as_ref().map(fmt_rational)).collect(),
        });
        report.push(compare_printed(&form, &f));
    }

    if entry.slug == "q11-minus" {
        let closed = q11_algebra(&c(&b.constants, "K"), &c(&b.constants, "L"));
        report.push(Check::from_bool("closed-form", closed.f == f, "0").with_note(format!(
            "3x^2 + (2L-1)x + K - L(L+1) = {}",
            closed.f
        )));
    }
    Ok(report)
}

/// The realization matrices of an entry, for export.
pub fn export_entry(name: &str, overrides: &Constants, n_max: u32) -> Result<EntryReport> {
    let b = build_entry(name, overrides, n_max)?;
    let mut report = EntryReport::new(b.entry.slug)
        .with_constants(&b.constants)
        .derived(&b.built.algebra.f);
    report.recipe = Some(b.entry.recipe.to_string());
    report.matrices = Some(TripleExport::from(&b.built.triple));
    Ok(report)
}
