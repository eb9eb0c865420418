fn main() -> std::process::ExitCode {
    permspectra::cli::main()
}
