fn main() {
    std::process::exit(spst::cli::main_with_args(std::env::args_os()));
}
