// The `(k, l)` representations of `Q⁻(1,1)`, their Casimir values and the
// two-dimensional family.

use polyalg::catalog::q11::{q11_casimir_value, q11_irrep, q11_irrep_exact, two_dim_casimir};
use polyalg::rational::{fmt_list, rat};

pub fn run() -> polyalg::Result<()> {
    let (k, l) = (rat(1, 2), rat(3, 4));
    let t = q11_irrep(&k, &l)?;
    println!("(1/2, 3/4): Q0 = {:?}, Q+ = {:?}", t.d.to_dense(), t.r.to_dense());
    println!("casimir = {}, family = {}", q11_casimir_value(&k, &l), two_dim_casimir(&k));

    let (k, l) = (rat(3, 2), rat(11, 4));
    let exact = q11_irrep_exact(&k, &l)?;
    println!("(3/2, 11/4): dim {}, Q0 = {}", exact.dim(), fmt_list(&exact.d.diagonal()));
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
