fn main() {
    std::process::exit(la_ideals::cli::cli_main(std::env::args_os()));
}
