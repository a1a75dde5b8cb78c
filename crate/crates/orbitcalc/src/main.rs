fn main() {
    std::process::exit(orbitcalc::cli::run(std::env::args_os()));
}
