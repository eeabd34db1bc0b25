fn main() -> std::process::ExitCode {
    mcgraph::cli::main()
}
