use std::process::ExitCode;

fn main() -> ExitCode {
    abwave::cli::main_with_args(std::env::args_os())
}
