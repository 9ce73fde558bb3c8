fn main() {
    std::process::exit(rp4::cli::run(std::env::args_os()));
}
