fn main() {
    std::process::exit(quadseq::cli::run());
}
