fn main() {
    std::process::exit(ringgraph::cli::run(std::env::args_os()));
}
