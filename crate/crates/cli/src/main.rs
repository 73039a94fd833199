fn main() {
    std::process::exit(afflap_cli::run(std::env::args_os()));
}
