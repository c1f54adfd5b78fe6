// Deformed oscillators: the fermion and the quadratic oscillator obtained by
// rescaling a `Q⁻(1,1)` irrep.

use polyalg::catalog::oscillator::{canonical_fermion, quadratic_oscillator, quadratic_structure};
use polyalg::catalog::q11::{q11_irrep, su11_casimir_value};
use polyalg::rational::{int, rat};

pub fn run() -> polyalg::Result<()> {
    let fermion = canonical_fermion();
    println!("fermion: F(N) = {}, pass = {}", fermion.structure, fermion.verify(0.0)?.all_pass());

    let (k, l) = (int(1), rat(5, 2));
    let big_k = su11_casimir_value(&k);
    let osc = quadratic_oscillator(&big_k, &l, &q11_irrep(&k, &l)?)?;
    println!("(1, 5/2): F(N) = {}", quadratic_structure(&big_k, &l)?);
    println!("pass = {}", osc.verify(1e-12)?.all_pass());
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
