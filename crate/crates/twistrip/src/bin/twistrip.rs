fn main() {
    std::process::exit(twistrip::cli::run());
}
