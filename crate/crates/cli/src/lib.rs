//! Front end for the `tauq` library: link loading, report commands with
//! canonical JSON output, and the acceptance suite behind `verify`.

pub mod acceptance;
pub mod commands;
pub mod config;

use std::io::Write;

use clap::Parser;

pub use commands::{execute, render, Outcome, Status};
pub use config::{Cli, Command, LinkSource, RunConfig};

/// Exit status for inputs that cannot be used.
pub const USAGE_ERROR: i32 = 2;

/// Parses `args`, runs the command and writes its JSON; returns the exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { USAGE_ERROR } else { 0 };
        }
    };
    let cfg = match RunConfig::from_cli(&cli) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return USAGE_ERROR;
        }
    };
    let outcome = match cfg.jobs {
        Some(j) => tauq::par::with_jobs(j, || execute(&cfg, stderr)),
        None => execute(&cfg, stderr),
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return USAGE_ERROR;
        }
    };
    let text = render(&outcome.json);
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return USAGE_ERROR;
    }
    outcome.status.exit_code()
}
