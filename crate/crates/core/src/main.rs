use std::process::ExitCode;

fn main() -> ExitCode {
    lforge::cli::run()
}
