fn main() { std::process::exit(seqrecon::cli::main()) }
