fn main() { std::process::exit(engel::cli::run(std::env::args().skip(1))); }
