#[allow(dead_code)]
mod bargmann {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/bargmann.rs"));
}

#[allow(dead_code)]
mod calogero {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/calogero.rs"));
}

#[allow(dead_code)]
mod casimir {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/casimir.rs"));
}

#[allow(dead_code)]
mod catalog_table {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/catalog_table.rs"));
}

#[allow(dead_code)]
mod compose {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/compose.rs"));
}

#[allow(dead_code)]
mod deformed_oscillator {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/deformed_oscillator.rs"));
}

#[allow(dead_code)]
mod exact_polynomials {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/exact_polynomials.rs"));
}

#[allow(dead_code)]
mod finite_irreps {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/finite_irreps.rs"));
}

#[allow(dead_code)]
mod fock_realization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fock_realization.rs"));
}

#[allow(dead_code)]
mod json_report {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/json_report.rs"));
}

#[allow(dead_code)]
mod q11_representation {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/q11_representation.rs"));
}

#[allow(dead_code)]
mod susy_matching {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/susy_matching.rs"));
}

#[test]
fn bargmann_runs() {
    bargmann::run().expect("bargmann example should run");
}

#[test]
fn calogero_runs() {
    calogero::run().expect("calogero example should run");
}

#[test]
fn casimir_runs() {
    casimir::run().expect("casimir example should run");
}

#[test]
fn catalog_table_runs() {
    catalog_table::run().expect("catalog_table example should run");
}

#[test]
fn compose_runs() {
    compose::run().expect("compose example should run");
}

#[test]
fn deformed_oscillator_runs() {
    deformed_oscillator::run().expect("deformed_oscillator example should run");
}

#[test]
fn exact_polynomials_runs() {
    exact_polynomials::run().expect("exact_polynomials example should run");
}

#[test]
fn finite_irreps_runs() {
    finite_irreps::run().expect("finite_irreps example should run");
}

#[test]
fn fock_realization_runs() {
    fock_realization::run().expect("fock_realization example should run");
}

#[test]
fn json_report_runs() {
    json_report::run().expect("json_report example should run");
}

#[test]
fn q11_representation_runs() {
    q11_representation::run().expect("q11_representation example should run");
}

#[test]
fn susy_matching_runs() {
    susy_matching::run().expect("susy_matching example should run");
}
