fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(frankcert_cli::run(&argv));
}
