fn main() {
    std::process::exit(monozeta::cli::run());
}
