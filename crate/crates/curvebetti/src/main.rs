use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(curvebetti::cli::run() as u8)
}
