fn main() {
    std::process::exit(grouprep::cli::run(std::env::args_os()));
}
