fn main() -> std::process::ExitCode {
    wielandt::cli::main_exit()
}
