fn main() {
    std::process::exit(eqdeg::cli::run(std::env::args_os()));
}
