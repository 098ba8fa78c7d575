fn main() {
    std::process::exit(pvix_cli::run(std::env::args().skip(1)));
}
