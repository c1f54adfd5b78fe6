fn main() {
    std::process::exit(polyalg::cli::main_with_args(std::env::args_os()));
}
