fn main() {
    std::process::exit(bkcodes::cli::run(std::env::args_os()));
}
