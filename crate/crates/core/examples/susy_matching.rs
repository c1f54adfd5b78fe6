// Affine matching of the SUSY-partner ladder commutators with catalog
// polynomials.

use polyalg::catalog::susy::{linear_commutator, match_q11, radial_commutator, radial_report};
use polyalg::rational::{int, rat};

pub fn run() -> polyalg::Result<()> {
    let m = match_q11(&linear_commutator(&int(1)))?;
    println!("linear eps = 1: T(x) = {}, K = {}, L = {}", m.transformed, m.constants["K"], m.constants["L"]);

    let p = radial_commutator(&rat(1, 2), &int(1));
    println!("radial: {p}");
    let report = radial_report(&rat(1, 2), &int(1), &int(-4));
    for c in &report.checks {
        println!("  {}: {:?} {}", c.name, c.status, c.note.as_deref().unwrap_or(""));
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
