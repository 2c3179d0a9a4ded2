use std::process::ExitCode;

fn main() -> ExitCode {
    subcubic::cli::main_with_args(std::env::args_os())
}
