fn main() {
    std::process::exit(qkit::cli::run());
}
