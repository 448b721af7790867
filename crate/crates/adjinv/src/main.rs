fn main() {
    std::process::exit(adjinv::cli::run());
}
