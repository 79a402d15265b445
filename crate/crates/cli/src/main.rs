fn main() {
    std::process::exit(qsearch_cli::run(std::env::args_os()));
}
