fn main() {
    std::process::exit(zzosp::cli::main_with_args(std::env::args_os()));
}
