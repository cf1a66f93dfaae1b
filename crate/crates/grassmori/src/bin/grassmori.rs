fn main() {
    std::process::exit(grassmori::cli::main_with(std::env::args_os()));
}
