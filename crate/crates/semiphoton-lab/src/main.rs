fn main() {
    std::process::exit(semiphoton_lab::cli::run());
}
