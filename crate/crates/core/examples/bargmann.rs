// Differential operators on polynomials in `z` realizing `Q(1,1)`, and their
// matrices in the normalized monomial basis.

use polyalg::bargmann::{bargmann_triple, matrix_in_phi_basis, PhiBasis};
use polyalg::rational::int;

pub fn run() -> polyalg::Result<()> {
    let (k, l) = (int(1), int(2));
    let ops = bargmann_triple(&k, &l)?;
    println!("Q0 = {}\nQ+ = {}\nQ- = {}", ops.q0, ops.q_plus, ops.q_minus);
    println!("[Q+, Q-] = {}", ops.q_plus.commutator(&ops.q_minus));

    let basis = PhiBasis::new(&k, &l)?;
    let up = matrix_in_phi_basis(&ops.q_plus, &basis)?;
    for n in 0..basis.dim() - 1 {
        println!("<{}|Q+|{n}> = sqrt({})", n + 1, up.get(n + 1, n).signed_square());
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
