fn main() {
    std::process::exit(uniformity_workbench::cli::main());
}
