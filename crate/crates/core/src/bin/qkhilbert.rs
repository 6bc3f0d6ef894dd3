fn main() {
    std::process::exit(qkhilbert::cli::main_with_args(std::env::args_os()));
}
