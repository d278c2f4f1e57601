fn main() {
    std::process::exit(annform::cli::run());
}
