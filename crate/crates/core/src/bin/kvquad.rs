fn main() {
    std::process::exit(kvquad::verifier::cli_main(std::env::args_os()));
}
