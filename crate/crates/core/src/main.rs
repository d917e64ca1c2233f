use std::process::ExitCode;

fn main() -> ExitCode {
    isar_lint::cli::main()
}
