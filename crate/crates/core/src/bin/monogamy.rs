fn main() {
    std::process::exit(monogamy::cli::run(std::env::args_os()));
}
