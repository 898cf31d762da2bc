fn main() {
    std::process::exit(z4_census::cli::main_with(std::env::args_os()));
}
