use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = partition_forge_cli::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    ExitCode::from(code as u8)
}
