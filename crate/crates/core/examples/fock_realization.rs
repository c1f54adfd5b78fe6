// Schwinger realizations on a truncated Fock space and charge sectors.

use polyalg::fock::{schwinger_build, sector_extract, FockSpace, Kind};
use polyalg::rational::{int, Rational};
use polyalg::{verify_realization, Status};

pub fn run() -> polyalg::Result<()> {
    let space = FockSpace::new(2, 6);
    let su2 = schwinger_build::<Rational>(&space, Kind::Su2(0, 1), "j")?;
    let (r, l) = (&su2.triple.r, &su2.triple.l);
    let sector = sector_extract(&su2.charges[0], int(2), &[r, l])?;
    let spin2 = su2.triple.restrict(&sector.indices)?;
    let report = verify_realization(&spin2, &Kind::Su2(0, 1).algebra(), 0.0)?;
    println!("spin 2 from two modes: {} states, all pass = {}", spin2.dim(), report.all_pass());

    // su(1,1) is infinite; columns touched by the cutoff are excluded.
    let su11 = schwinger_build::<Rational>(&space, Kind::Su11(0, 1), "k")?;
    let report = verify_realization(&su11.triple, &Kind::Su11(0, 1).algebra(), 0.0)?;
    for check in &report.checks {
        let tag = if check.status == Status::Pass { "pass" } else { "skipped" };
        println!("su(1,1) {}: {tag} ({})", check.name, check.residual);
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
