fn main() {
    std::process::exit(graphcodes::cli::run(std::env::args_os()));
}
