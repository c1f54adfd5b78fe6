// Casimir operators from a structure polynomial: `C = N+ N- + h(N0)` with
// `h(x + 1) - h(x) = f(x)`.

use polyalg::catalog::q11::q11_algebra;
use polyalg::rational::{int, rat};
use polyalg::{casimir_from_structure, Polynomial, PolyAlgebra};

pub fn run() -> polyalg::Result<()> {
    let su2 = PolyAlgebra::su2();
    println!("su(2): f = {}, h = {}", su2.f, casimir_from_structure(&su2).h);

    // Q⁻(1,1) at K = 0, L = 3/2.
    let q = q11_algebra(&int(0), &rat(3, 2));
    let h = casimir_from_structure(&q).h;
    println!("Q(1,1): f = {}, h = {h}", q.f);
    assert_eq!(&h.shift(&int(1)) - &h, q.f);

    let cubic = PolyAlgebra::new(Polynomial::from_ints(&[1, 0, 0, -4]));
    println!("cubic: f = {}, h = {}", cubic.f, cubic.casimir().h);
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
