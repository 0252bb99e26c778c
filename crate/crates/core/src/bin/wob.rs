fn main() {
    std::process::exit(wob::cli::run());
}
