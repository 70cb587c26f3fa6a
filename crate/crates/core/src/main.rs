use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use quatlin::cli::{self, Cli, Options, OutputMode, EXIT_PARSE, OUTPUT_ENV};

fn main() -> ExitCode {
    let args = Cli::parse();
    let mode = match OutputMode::from_env_value(std::env::var(OUTPUT_ENV).ok().as_deref()) {
        Ok(mode) => mode,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_PARSE as u8);
        }
    };
    let outcome = cli::run(&args.command, Options { mode, approx: args.approx });
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}
