use std::io::{self, BufWriter};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let status = bbwt_cli::run(std::env::args_os(), &mut io::stdin().lock(), &mut out, &mut io::stderr());
    drop(out);
    ExitCode::from(status as u8)
}
