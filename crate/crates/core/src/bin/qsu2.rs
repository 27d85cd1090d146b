fn main() {
    std::process::exit(qsu2::cli::run_main());
}
