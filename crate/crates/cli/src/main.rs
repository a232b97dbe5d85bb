use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = io::stderr();
    let code = serialrank_cli::run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() && code == serialrank_cli::EXIT_OK {
        return ExitCode::from(serialrank_cli::EXIT_USAGE as u8);
    }
    ExitCode::from(code as u8)
}
