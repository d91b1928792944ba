fn main() {
    std::process::exit(s1fc::cli::main_with_args(std::env::args_os()));
}
