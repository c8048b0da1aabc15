fn main() {
    std::process::exit(skewgroth::cli::main_with_args(std::env::args_os()));
}
