fn main() {
    std::process::exit(integral_identities::cli::main_with_args(std::env::args_os()));
}
