// Running the command-line driver in process and rendering its report.

use clap::Parser;
use polyalg::cli::{self, render, Cli, Format};

pub fn run() -> polyalg::Result<()> {
    let cli = Cli::parse_from(["polyalg", "irrep", "--algebra", "q11-minus", "--k", "1/2", "--l", "3/4"]);
    let outcome = cli::run(&cli)?;
    print!("{}", render(&outcome.reports, Format::Json));
    println!("exit code {}", outcome.code);
    Ok(())
}

fn main() -> polyalg::Result<()> {
    run()
}
