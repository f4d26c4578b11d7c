use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = biquad90_cli::run(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
