fn main() {
    std::process::exit(dcs::cli::run(std::env::args_os()));
}
