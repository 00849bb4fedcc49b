fn main() {
    std::process::exit(jfrac::cli::main());
}
