fn main() {
    std::process::exit(qhe_cli::run());
}
