mod args;
mod commands;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Why a command stopped short of success.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags, ranges or words. Exit 2.
    Usage(String),
    /// A delegate rejected its input. Exit 1.
    Domain(String),
    /// At least one identity instance failed. Exit 1, nothing more to say.
    Mismatch,
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Count(a) => commands::count(&a, &mut out),
        Command::Enumerate(a) => commands::enumerate(&a, &mut out),
        Command::Biject(a) => commands::biject(&a, &mut out),
        Command::Verify(a) => commands::verify(&a, &mut out),
        Command::Table(a) => commands::table(&a, &mut out),
    };
    let flushed = out.flush();
    match result.and(flushed.map_err(Failure::Io)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
