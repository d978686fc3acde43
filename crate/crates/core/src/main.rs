fn main() {
    std::process::exit(refuel::cli::run(std::env::args_os()));
}
