use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use stacksort_cli::args::Cli;
use stacksort_cli::{run, EXIT_USAGE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = run(&cli);
    eprint!("{}", out.stderr);
    let written = match &cli.output {
        Some(path) if !out.stdout.is_empty() => fs::write(path, &out.stdout).map_err(|e| format!("{}: {e}", path.display())),
        _ => std::io::stdout().write_all(out.stdout.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(out.code as u8)
}
