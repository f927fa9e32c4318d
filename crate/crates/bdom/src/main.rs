fn main() {
    let code = bdom::cli::run(std::env::args().collect());
    std::process::exit(code);
}
