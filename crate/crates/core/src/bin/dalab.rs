fn main() {
    std::process::exit(dalab::cli::main_with_args(std::env::args_os()));
}
