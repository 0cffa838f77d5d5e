fn main() {
    std::process::exit(gallai_cli::main_with_stdout());
}
