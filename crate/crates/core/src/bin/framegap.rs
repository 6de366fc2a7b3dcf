fn main() {
    std::process::exit(framegap::cli::run(std::env::args_os()));
}
