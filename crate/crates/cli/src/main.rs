fn main() {
    std::process::exit(tanpick_cli::run());
}
