fn main() {
    std::process::exit(hypersupport::cli::main())
}
