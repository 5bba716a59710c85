fn main() {
    std::process::exit(fibcfg::cli::run(std::env::args_os()));
}
