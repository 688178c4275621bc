fn main() {
    std::process::exit(equitangent::cli::run(std::env::args_os()));
}
