fn main() {
    std::process::exit(ncfriction::cli::run(std::env::args_os()));
}
