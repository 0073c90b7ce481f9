fn main() {
    std::process::exit(penergy::cli::run());
}
