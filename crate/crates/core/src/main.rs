fn main() {
    std::process::exit(unipinv::cli::run(std::env::args()));
}
