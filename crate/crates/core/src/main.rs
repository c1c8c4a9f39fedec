fn main() {
    std::process::exit(bipancyclic::cli::run_subcommand(std::env::args_os()));
}
