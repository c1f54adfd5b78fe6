// Finite lowest-weight irreps: scan candidate lowest weights, keep the
// labels whose ladder closes with a positive interior, build the matrices.

use polyalg::algebra::{build_irrep_exact, build_irrep_unitary, find_finite_irreps};
use polyalg::catalog::q11::{lowest_weight_candidates, q11_algebra_for};
use polyalg::rational::{fmt_list, int, rat};
use polyalg::{verify_realization, PolyAlgebra};

pub fn run() -> polyalg::Result<()> {
    let su2 = PolyAlgebra::su2();
    let candidates: Vec<_> = (0..=6).map(|n| rat(-n, 2)).collect();
    for label in find_finite_irreps(&su2, &candidates, 8) {
        println!("su(2): mu = {}, dim = {}, casimir = {}", label.mu, label.dim, label.casimir_value);
    }

    // Q⁻(1,1) at (k, l) = (1, 2): lowest weights of a 4-dimensional irrep
    // are rational roots of h(x + 4) - h(x).
    let alg = q11_algebra_for(&int(1), &int(2));
    let candidates = lowest_weight_candidates(&alg, 4);
    println!("Q(1,1) candidates for dim 4: {}", fmt_list(&candidates));
    let labels = find_finite_irreps(&alg, &candidates, 6);
    let label = labels.iter().find(|x| x.dim == 4).expect("dimension-4 label");
    let exact = build_irrep_exact(&alg, label)?;
    let unitary = build_irrep_unitary(&alg, label)?;
    assert!(verify_realization(&exact, &alg, 0.0)?.all_pass());
    assert!(verify_realization(&unitary, &alg, 1e-12)?.all_pass());
    println!("mu = {}, Q0 = {}", label.mu, fmt_list(&exact.d.diagonal()));
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
