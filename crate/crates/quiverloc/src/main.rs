fn main() {
    std::process::exit(quiverloc::cli::main());
}
