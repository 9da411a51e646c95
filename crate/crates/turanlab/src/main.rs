fn main() {
    std::process::exit(turanlab::cli::run(std::env::args_os()));
}
