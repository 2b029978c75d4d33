fn main() {
    std::process::exit(relprime::cli::run_cli(std::env::args_os()));
}
