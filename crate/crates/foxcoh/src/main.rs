fn main() {
    std::process::exit(foxcoh::cli::run());
}
