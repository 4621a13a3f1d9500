fn main() {
    std::process::exit(framelink::cli::main_with_env());
}
