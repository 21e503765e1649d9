fn main() { std::process::exit(mecsim::cli::main()); }
