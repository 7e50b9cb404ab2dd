fn main() {
    std::process::exit(ghwmpc::cli::run());
}
