//! The quadratic algebra `Q⁻(1,1)` and its `(k, l)` representations.
//!
//! With `K = k(1 - k)` and `L = l` the structure polynomial is
//! `f(x) = 3x² + (2L - 1)x + K - L(L + 1)`, and the representation on the
//! three-mode states `|n, n + 2k - 1, 2l - k - n>` has
//! `Q0 = k - l + n` and `Q+ Q-` eigenvalue `t_n = n(n + 2k - 1)(2l - k - n + 1)`.

use num_traits::{Signed, Zero};

use crate::algebra::{exact_from_ladder, find_finite_irreps, unitary_from_ladder, IrrepLabel, PolyAlgebra};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{int, is_half_integer, rat, Rational};
use crate::report::EntryReport;
use crate::triple::GeneratorTriple;
use crate::verify::{scalar_value, verify_realization, Check};

/// `K = k(1 - k)`, the su(1,1) Casimir of Bargmann index `k`.
pub fn su11_casimir_value(k: &Rational) -> Rational {
    k * (int(1) - k)
}

/// `Q⁻(1,1)` at fixed Casimir `K` and label `L`.
pub fn q11_algebra(big_k: &Rational, big_l: &Rational) -> PolyAlgebra {
    PolyAlgebra::new(Polynomial::new(vec![
        big_k - big_l * (big_l + int(1)),
        big_l * int(2) - int(1),
        int(3),
    ]))
}

/// The algebra carried by the `(k, l)` representation.
pub fn q11_algebra_for(k: &Rational, l: &Rational) -> PolyAlgebra {
    q11_algebra(&su11_casimir_value(k), l)
}

/// The closed-form Casimir polynomial `x³ + (L - 2)x² + (K - L² - 2L + 1)x`.
pub fn q11_casimir_polynomial(big_k: &Rational, big_l: &Rational) -> Polynomial {
    Polynomial::new(vec![
        Rational::zero(),
        big_k - big_l * big_l - big_l * int(2) + int(1),
        big_l - int(2),
        int(1),
    ])
}

/// `l³ + (l + 1)[k(1 - k) - 1] + 1`.
pub fn q11_casimir_value(k: &Rational, l: &Rational) -> Rational {
    l * l * l + (l + int(1)) * (su11_casimir_value(k) - int(1)) + int(1)
}

/// Casimir of the two-dimensional representation at `l = (k + 1)/2`:
/// `(-3k³ - 5k² + 11k - 3)/8`.
pub fn two_dim_casimir(k: &Rational) -> Rational {
    (int(-3) * k * k * k - int(5) * k * k + int(11) * k - int(3)) * rat(1, 8)
}

/// Checks the grid condition and returns the dimension `2l - k + 1`.
pub fn q11_dimension(k: &Rational, l: &Rational) -> Result<usize> {
    let twice_k = k * int(2);
    if !twice_k.is_integer() || !twice_k.is_positive() {
        return Err(Error::InvalidLabel(format!("k = {k} must be one of 1/2, 1, 3/2, ...")));
    }
    let span = l * int(2) - k;
    if !span.is_integer() || span.is_negative() {
        return Err(Error::InvalidLabel(format!(
            "2l - k = {span} must be a nonnegative integer (k = {k}, l = {l})"
        )));
    }
    let span: usize = span.to_integer().try_into().expect("span fits in usize");
    Ok(span + 1)
}

/// `(t_0, ..., t_dim)` with `t_n = n(n + 2k - 1)(2l - k - n + 1)`.
pub fn q11_raising_squares(k: &Rational, l: &Rational) -> Result<Vec<Rational>> {
    let dim = q11_dimension(k, l)?;
    Ok((0..=dim)
        .map(|n| {
            let n = int(n as i64);
            &n * (&n + k * int(2) - int(1)) * (l * int(2) - k - &n + int(1))
        })
        .collect())
}

/// Lowest weight, dimension and Casimir of the `(k, l)` representation.
pub fn q11_label(k: &Rational, l: &Rational) -> Result<IrrepLabel> {
    Ok(IrrepLabel {
        mu: k - l,
        dim: q11_dimension(k, l)?,
        casimir_value: q11_casimir_value(k, l),
    })
}

/// Unitary matrices: `Q0 = diag(k - l + n)`, `Q±` with entries `sqrt(t)`.
pub fn q11_irrep(k: &Rational, l: &Rational) -> Result<GeneratorTriple<f64>> {
    let t = q11_raising_squares(k, l)?;
    Ok(unitary_from_ladder(&(k - l), &t[..t.len() - 1]))
}

/// Weighted exact matrices: `Q+` carries `t`, `Q-` carries ones.
pub fn q11_irrep_exact(k: &Rational, l: &Rational) -> Result<GeneratorTriple<Rational>> {
    let t = q11_raising_squares(k, l)?;
    Ok(exact_from_ladder(&(k - l), &t[..t.len() - 1]))
}

/// Grid points `(k, l)` with `k = 1/2, 1, ..., max_twice_k/2` and `2l - k <= max_span`.
pub fn q11_grid(max_twice_k: i64, max_span: i64) -> Vec<(Rational, Rational)> {
    let mut out = Vec::new();
    for twice_k in 1..=max_twice_k {
        let k = rat(twice_k, 2);
        for span in 0..=max_span {
            let l = (&k + int(span)) * rat(1, 2);
            out.push((k.clone(), l));
        }
    }
    out
}

/// Candidate lowest weights of a `dim`-dimensional representation: the
/// rational roots of `h(x + dim) - h(x)`.
pub fn lowest_weight_candidates(alg: &PolyAlgebra, dim: usize) -> Vec<Rational> {
    let h = alg.casimir().h;
    (&h.shift(&int(dim as i64)) - &h).rational_roots()
}

/// Half-integer check used by callers validating `k`.
pub fn is_valid_k(k: &Rational) -> bool {
    is_half_integer(k) && k.is_positive()
}

/// Exact checks over the grid `2k <= max_twice_k`, `2l - k <= max_span`:
/// realization, closed-form Casimir, the two-dimensional family and the
/// dimension condition.
pub fn q11_irreps_report(max_twice_k: i64, max_span: i64) -> Result<EntryReport> {
    let grid = q11_grid(max_twice_k, max_span);
    let mut failures: Vec<(&str, String)> = Vec::new();
    let mut note = |name: &'static str, ok: bool, at: &dyn Fn() -> String| {
        if !ok && !failures.iter().any(|(n, _)| *n == name) {
            failures.push((name, at()));
        }
    };
    for (k, l) in &grid {
        let at = || format!("(k, l) = ({k}, {l})");
        let dim = q11_dimension(k, l)?;
        let alg = q11_algebra_for(k, l);
        let triple = q11_irrep_exact(k, l)?;
        note("realization", verify_realization(&triple, &alg, 0.0)?.all_pass(), &at);

        let value = q11_casimir_value(k, l);
        let big_k = su11_casimir_value(k);
        let op = &(&triple.r * &triple.l) + &triple.d.poly_of_diagonal(&q11_casimir_polynomial(&big_k, l))?;
        note("casimir closed form", scalar_value(&op) == Some(value.clone()), &at);
        note("casimir from structure", scalar_value(&alg.casimir().operator(&triple)?) == Some(value.clone()), &at);
        if dim == 2 {
            note("two-dim family", two_dim_casimir(k) == value, &at);
        }

        let labels = find_finite_irreps(&alg, &lowest_weight_candidates(&alg, dim), dim);
        let hits: Vec<_> = labels.iter().filter(|x| x.dim == dim).collect();
        let ok = if dim == 1 {
            hits.iter().any(|x| x.mu == k - l) && hits.iter().all(|x| alg.f.eval(&x.mu).is_zero())
        } else {
            hits.len() == 1 && hits[0].mu == k - l && hits[0].casimir_value == value
        };
        note("dimension condition", ok, &at);
    }
    let mut report = EntryReport::new("q11-irreps")
        .constant("max_span", &int(max_span))
        .constant("max_twice_k", &int(max_twice_k));
    for name in [
        "realization",
        "casimir closed form",
        "casimir from structure",
        "two-dim family",
        "dimension condition",
    ] {
        report.push(match failures.iter().find(|(n, _)| *n == name) {
            Some((_, at)) => Check::fail(name, format!("first failure at {at}")),
            None => Check::pass(name),
        });
    }
    report.notes.push(format!("{} grid points", grid.len()));
    report.notes.push("dimension one: every root of f is a label; only k - l is required".into());
    Ok(report)
}
