fn main() {
    std::process::exit(rpp::cli::run());
}
