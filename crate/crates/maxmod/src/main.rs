fn main() {
    std::process::exit(maxmod::cli::main());
}
