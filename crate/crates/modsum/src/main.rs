fn main() {
    std::process::exit(modsum::cli::run(std::env::args()));
}
