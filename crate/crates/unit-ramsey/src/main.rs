fn main() {
    std::process::exit(unit_ramsey::cli::run(std::env::args()));
}
