fn main() {
    std::process::exit(tutte_cas::cli::run(std::env::args_os()));
}
