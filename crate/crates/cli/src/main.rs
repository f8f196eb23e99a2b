use std::io::Write;
use std::process::ExitCode;

use sgp_lab::{parse_args, run, ParseError};

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let cmd = match parse_args(&args) {
        Ok(cmd) => cmd,
        Err(ParseError::Display(text)) => {
            print!("{text}");
            return ExitCode::SUCCESS;
        }
        Err(e @ ParseError::Invalid { position, .. }) => {
            let line = args.join(" ");
            eprintln!("error: {e}");
            eprintln!("  {line}");
            eprintln!("  {}^", " ".repeat(position));
            return ExitCode::from(2);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let status = run(&cmd, &mut out);
    let _ = out.flush();
    if let Some(e) = &status.error {
        eprintln!("error: {e}");
    }
    ExitCode::from(status.code)
}
