//! Command-line front end for `nil3`.
//!
//! [`run`] parses `argv`, executes one subcommand and returns the exit
//! code: 0 when every check passes, 1 when a check fails, 2 on usage, parse
//! or IO errors.

mod args;
mod commands;
mod error;
pub mod export;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use error::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            report_error(&CliError::Usage(e.kind().to_string()), &e.to_string(), json, err);
            return EXIT_USAGE;
        }
    };
    match commands::execute(&cli, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(e) => {
            report_error(&e, &e.to_string(), cli.json, err);
            EXIT_USAGE
        }
    }
}

fn report_error(e: &CliError, text: &str, json: bool, err: &mut dyn Write) {
    let _ = if json {
        let mut r = e.report();
        r.message = text.trim_end().to_owned();
        writeln!(err, "{}", serde_json::to_string(&r).unwrap_or_default())
    } else {
        writeln!(err, "error: {}", text.trim_end().trim_start_matches("error: "))
    };
}
