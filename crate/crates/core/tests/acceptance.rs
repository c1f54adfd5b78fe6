//! Acceptance criteria 1-10. Each test writes one `criterion N: PASS|FAIL`
//! line to the real stdout (bypassing the test harness capture) and then
//! asserts.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use polyalg::algebra::find_finite_irreps;
use polyalg::bargmann::{bargmann_triple, matrix_in_phi_basis, PhiBasis};
use polyalg::catalog::calogero::calogero_cubic;
use polyalg::catalog::oscillator::canonical_fermion;
use polyalg::catalog::q11::{
    lowest_weight_candidates, q11_algebra_for, q11_casimir_polynomial, q11_dimension, q11_grid, q11_irrep,
    q11_irrep_exact, su11_casimir_value,
};
use polyalg::catalog::recipe::Recipe;
use polyalg::catalog::susy::{linear_commutator, match_q11, radial_commutator};
use polyalg::catalog::{build_entry, compare_printed, entries, Constants};
use polyalg::composer::{required_samples, Variant};
use polyalg::matrix::Matrix;
use polyalg::rational::{int, rat, Rational};
use polyalg::verify::scalar_value;
use polyalg::{verify_realization, Polynomial, Status};

fn record(n: u32, ok: bool, detail: &str) {
    let verdict = if ok { "PASS" } else { "FAIL" };
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n}: {verdict} -- {detail}");
    let _ = out.flush();
    assert!(ok, "criterion {n} failed: {detail}");
}

/// `k = 1/2, ..., 5` and `2l - k <= 10`.
fn grid() -> Vec<(Rational, Rational)> {
    q11_grid(10, 10)
}

/// `l³ + (l + 1)[k(1 - k) - 1] + 1`, written out independently.
fn casimir_formula(k: &Rational, l: &Rational) -> Rational {
    l * l * l + (l + int(1)) * (k * (int(1) - k) - int(1)) + int(1)
}

#[test]
fn criterion_01_casimir_value() {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (k, l) in grid() {
        let t = q11_irrep_exact(&k, &l).unwrap();
        let alg = q11_algebra_for(&k, &l);
        let want = casimir_formula(&k, &l);
        let from_h = scalar_value(&alg.casimir().operator(&t).unwrap());
        let closed = &(&t.r * &t.l) + &t.d.poly_of_diagonal(&q11_casimir_polynomial(&su11_casimir_value(&k), &l)).unwrap();
        if from_h != Some(want.clone()) || scalar_value(&closed) != Some(want) {
            bad.push(format!("({k}, {l})"));
        }
    }
    let elapsed = start.elapsed();
    let ok = bad.is_empty() && elapsed < Duration::from_secs(5);
    record(1, ok, &format!("{} grid points, mismatches {bad:?}, {elapsed:.2?}", grid().len()));
}

#[test]
fn criterion_02_two_dim_family() {
    let mut bad = Vec::new();
    for twice_k in 1..=10 {
        let k = rat(twice_k, 2);
        let l = (&k + int(1)) * rat(1, 2);
        let family = (int(-3) * &k * &k * &k - int(5) * &k * &k + int(11) * &k - int(3)) / int(8);
        let t = q11_irrep_exact(&k, &l).unwrap();
        let measured = scalar_value(&q11_algebra_for(&k, &l).casimir().operator(&t).unwrap());
        if t.dim() != 2 || family != casimir_formula(&k, &l) || measured != Some(family.clone()) {
            bad.push(k.to_string());
        }
    }
    let half = casimir_formula(&rat(1, 2), &rat(3, 4));
    record(2, bad.is_empty() && half == rat(7, 64), &format!("k = 1/2..5, value at k = 1/2 is {half}, mismatches {bad:?}"));
}

#[test]
fn criterion_03_canonical_fermion() {
    // f = E12, f† = E21, N = diag(0, 1), built here by hand.
    let f = Matrix::from_entries(2, [(0, 1, int(1))]);
    let f_dag = Matrix::from_entries(2, [(1, 0, int(1))]);
    let n = Matrix::from_diagonal(vec![int(0), int(1)]);
    let rhs = Polynomial::new(vec![int(1), rat(-1, 2), rat(-3, 2)]);
    let lhs = f.commutator(&f_dag);
    let direct = lhs == n.poly_of_diagonal(&rhs).unwrap();
    let library = canonical_fermion();
    let agrees = library.a == f && library.a_dag == f_dag && library.structure == rhs;
    let verified = library.verify(0.0).unwrap().all_pass();
    record(3, direct && agrees && verified, &format!("[f, f†] = {:?}", lhs.diagonal().iter().map(|v| v.to_string()).collect::<Vec<_>>()));
}

#[test]
fn criterion_04_calogero_cubic() {
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut largest = 0;
    for twice_j in 1..=12 {
        let j = rat(twice_j, 2);
        let c = calogero_cubic(&j).unwrap();
        let cubic = Polynomial::new(vec![int(0), int(2) * &j * (&j + int(1)) - int(1), int(0), int(-2)]);
        let lhs = c.c_plus.commutator(&c.c_minus);
        if lhs != c.c0.poly_of_diagonal(&cubic).unwrap() {
            bad.push(j.to_string());
        }
        largest = largest.max(c.c0.dim());
    }
    let elapsed = start.elapsed();
    record(
        4,
        bad.is_empty() && largest == 13 && elapsed < Duration::from_secs(2),
        &format!("j = 1/2..6, largest {largest}x{largest}, mismatches {bad:?}, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_05_order_theorem() {
    let start = Instant::now();
    // (left, right, variant, Pi, input orders)
    type Case = (&'static str, &'static str, Variant, Rational, (usize, usize));
    let cases: [Case; 6] = [
        ("su2:j=2", "su2:j=2", Variant::Plus, int(0), (1, 1)),
        ("su2:j=2", "su2:j=2", Variant::Cross, int(0), (1, 1)),
        ("su11:k=1/2", "su11:k=1/2", Variant::Plus, int(0), (1, 1)),
        ("su11:k=1/2", "su11:k=1", Variant::Cross, rat(19, 4), (1, 1)),
        ("su2:j=3", "q11:k=1/2,l=13/4", Variant::Cross, rat(1, 8), (1, 2)),
        ("q11:k=1/2,l=13/4", "q11:k=1/2,l=13/4", Variant::Plus, int(0), (2, 2)),
    ];
    // The quadratic inputs are themselves verified first.
    let q = q11_irrep_exact(&rat(1, 2), &rat(13, 4)).unwrap();
    let mut ok = verify_realization(&q, &q11_algebra_for(&rat(1, 2), &rat(13, 4)), 0.0).unwrap().all_pass();
    let mut lines = Vec::new();
    for (left, right, variant, pi, (m, n)) in cases {
        let recipe = Recipe::compose(left.parse().unwrap(), right.parse().unwrap(), variant, pi);
        let built = recipe.build(12).unwrap();
        let composed = built.composed.as_ref().unwrap();
        let degree = built.algebra.f.degree();
        let samples = composed.fit.sample_count();
        let t = &built.triple;
        let rl = t.r.commutator(&t.l);
        let jacobi = &(&t.d.commutator(&rl) + &t.r.commutator(&t.l.commutator(&t.d))) + &t.l.commutator(&t.d.commutator(&t.r));
        let case_ok = composed.inputs == (m, n)
            && degree == Some(m + n + 1)
            && samples >= required_samples(m, n)
            && jacobi.residual().exact_zero;
        ok &= case_ok;
        lines.push(format!("{recipe}: {}, {samples} samples", Polynomial::describe_degree(degree)));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(30);
    record(5, ok, &format!("{}; {elapsed:.2?}", lines.join("; ")));
}

#[test]
fn criterion_06_catalog_degrees() {
    let mut bad = Vec::new();
    let mut deviations = 0;
    for e in entries() {
        let small = build_entry(e.slug, &Constants::new(), 10).unwrap();
        let large = build_entry(e.slug, &Constants::new(), 14).unwrap();
        let (f, g) = (&small.algebra().f, &large.algebra().f);
        let enough = [&small, &large].iter().all(|b| {
            let c = b.built.composed.as_ref().unwrap();
            c.fit.sample_count() >= required_samples(c.inputs.0, c.inputs.1)
        });
        let expected = if e.name.starts_with('Q') { 2 } else { 3 };
        if f != g || f.degree() != Some(expected) || e.degree != expected || !enough {
            bad.push(e.slug);
        }
        for form in e.printed_forms(&small.constants) {
            let differs = form
                .coeffs
                .iter()
                .enumerate()
                .any(|(p, c)| c.as_ref().is_some_and(|c| *c != f.coeff(p)))
                || f.coeffs().len() > form.coeffs.len();
            let status = compare_printed(&form, f).status;
            if differs {
                deviations += 1;
            }
            if status != if differs { Status::DeviationDocumented } else { Status::Pass } {
                bad.push(e.slug);
            }
        }
    }
    record(
        6,
        bad.is_empty(),
        &format!("14 entries stable at n_max 10 and 14, {deviations} printed forms deviate (documented), problems {bad:?}"),
    );
}

#[test]
fn criterion_07_bargmann_equivalence() {
    let mut bad = Vec::new();
    let mut worst = 0.0f64;
    for (k, l) in grid() {
        let ops = bargmann_triple(&k, &l).unwrap();
        let basis = PhiBasis::new(&k, &l).unwrap();
        let dim = basis.dim();
        let [m0, mp, mm] = [&ops.q0, &ops.q_plus, &ops.q_minus].map(|op| matrix_in_phi_basis(op, &basis).unwrap());
        // t_n = n(n + 2k - 1)(2l - k - n + 1), written out here.
        let t = |n: usize| {
            let n = int(n as i64);
            &n * (&n + int(2) * &k - int(1)) * (int(2) * &l - &k - &n + int(1))
        };
        let up = Matrix::from_entries(dim, (1..dim).map(|q| (q, q - 1, t(q))));
        let down = Matrix::from_entries(dim, (1..dim).map(|q| (q - 1, q, t(q))));
        let diag_ok = (0..dim).all(|n| m0.get(n, n).exact() == Some(&k - &l + int(n as i64)));
        if mp.squared() != up || mm.squared() != down || !diag_ok {
            bad.push(format!("({k}, {l})"));
        }
        let u = q11_irrep(&k, &l).unwrap();
        for (s, f) in [(&m0, &u.d), (&mp, &u.r), (&mm, &u.l)] {
            worst = worst.max((&s.to_f64() - f).residual().max_abs);
        }
    }
    record(7, bad.is_empty() && worst <= 1e-12, &format!("{} grid points, squared mismatches {bad:?}, float max-abs {worst:e}", grid().len()));
}

/// Prints a red line without failing the test; used only where the literal
/// criterion is mathematically false and the true part is asserted instead.
fn record_red(n: u32, detail: &str) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "criterion {n}: FAIL -- {detail}");
    let _ = out.flush();
}

#[test]
fn criterion_08_dimension_condition() {
    let mut bad = Vec::new();
    let mut dim_one = Vec::new();
    let mut strict = 0;
    for (k, l) in grid() {
        let dim = q11_dimension(&k, &l).unwrap();
        let alg = q11_algebra_for(&k, &l);
        let labels = find_finite_irreps(&alg, &lowest_weight_candidates(&alg, dim), dim);
        let hits: Vec<_> = labels.iter().filter(|x| x.dim == dim).collect();
        if dim >= 2 {
            strict += 1;
            if !(hits.len() == 1 && hits[0].mu == &k - &l && hits[0].casimir_value == casimir_formula(&k, &l)) {
                bad.push(format!("({k}, {l})"));
            }
            continue;
        }
        // At 2l = k the condition reduces to f(mu) = 0, and every rational
        // root of f is a one-dimensional irrep.
        let mus: Vec<_> = hits.iter().map(|x| x.mu.clone()).collect();
        if mus != alg.f.rational_roots() || !mus.contains(&(&k - &l)) {
            bad.push(format!("({k}, {l})"));
        }
        if hits.len() != 1 {
            dim_one.push(format!("({k}, {l}): mu = {}", mus.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(", ")));
        }
    }
    assert!(bad.is_empty(), "dimension condition broken at {bad:?}");
    let summary = format!("{strict} grid points with 2l - k >= 1 give exactly one label, mu = k - l");
    if dim_one.is_empty() {
        record(8, true, &summary);
    } else {
        record_red(
            8,
            &format!(
                "{summary}; at {} points with 2l = k two one-dimensional labels exist (both roots of f): {}",
                dim_one.len(),
                dim_one.join("; ")
            ),
        );
    }
}

#[test]
fn criterion_09_susy_matching() {
    let values = [rat(1, 2), int(1), int(2)];
    let mut bad = Vec::new();
    for eps in &values {
        let p = linear_commutator(eps);
        let expected = Polynomial::new(vec![-(eps * eps), int(4) * eps, int(-3)]);
        match match_q11(&p) {
            Ok(m) if p == expected && m.residual().is_zero() => {
                // T is a Q⁻(1,1) structure polynomial at the matched (K, L).
                let (kk, ll) = (&m.constants["K"], &m.constants["L"]);
                let family = Polynomial::new(vec![kk - ll * (ll + int(1)), int(2) * ll - int(1), int(3)]);
                if m.transformed != family {
                    bad.push(format!("linear eps = {eps}"));
                }
            }
            _ => bad.push(format!("linear eps = {eps}")),
        }
        for gamma in &values {
            if radial_commutator(gamma, eps).degree() != Some(3) {
                bad.push(format!("radial gamma = {gamma}, eps = {eps}"));
            }
        }
    }
    record(9, bad.is_empty(), &format!("3 linear matches, 9 radial cubics, problems {bad:?}"));
}

#[test]
fn criterion_10_full_suite() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_polyalg"))
        .args(["verify", "--catalog", "all", "--n-max", "12"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).expect("json report");
    let entries = json.as_array().map_or(0, Vec::len);
    let ok = out.status.code() == Some(0) && elapsed < Duration::from_secs(60) && entries > 14;
    record(10, ok, &format!("exit {:?}, {entries} reports, {elapsed:.2?}", out.status.code()));
}
