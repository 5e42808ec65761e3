fn main() {
    std::process::exit(borcherds_audit::cli::run());
}
