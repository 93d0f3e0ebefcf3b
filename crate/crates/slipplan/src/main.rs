fn main() {
    std::process::exit(slipplan::run());
}
