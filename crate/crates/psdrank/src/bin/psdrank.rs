fn main() {
    std::process::exit(psdrank::cli::run(std::env::args()));
}
