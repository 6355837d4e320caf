fn main() {
    std::process::exit(mstable_psi::cli::run(std::env::args_os()));
}
