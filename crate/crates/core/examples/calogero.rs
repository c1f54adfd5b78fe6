// The Calogero cubic algebra from squared spin ladders.

use polyalg::catalog::calogero::calogero_cubic;
use polyalg::rational::{fmt_list, rat};

pub fn run() -> polyalg::Result<()> {
    for twice_j in [2, 3, 4] {
        let c = calogero_cubic(&rat(twice_j, 2))?;
        let comm = c.c_plus.commutator(&c.c_minus);
        println!("j = {}: [C+, C-] = {}, cubic = {}", c.j, fmt_list(&comm.diagonal()), c.cubic());
        println!("  normalized f = {}", c.normalized_algebra().f);
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
