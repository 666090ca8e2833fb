fn main() {
    std::process::exit(lielocal::cli::main());
}
