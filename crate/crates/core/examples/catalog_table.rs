// Every classified quadratic and cubic algebra, derived from its recipe and
// compared with the printed commutator.

use polyalg::catalog::{entries, verify_entry, Constants};
use polyalg::Status;

pub fn run() -> polyalg::Result<()> {
    for entry in entries() {
        let report = verify_entry(entry.slug, &Constants::new(), 12)?;
        let deviations = report.checks.iter().filter(|c| c.status == Status::DeviationDocumented).count();
        println!(
            "{:<10} degree {} f = [{}]  failed = {}, printed deviations = {deviations}",
            entry.name,
            entry.degree,
            report.derived_f.join(", "),
            report.failed()
        );
    }
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
