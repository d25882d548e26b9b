fn main() {
    std::process::exit(maxlot::cli::main());
}
