fn main() {
    std::process::exit(revtier::cli::main());
}
