mod args;
mod commands;
mod document;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::CliError;
use crate::report::{ErrorBody, ErrorJson};

fn fail(err: &CliError) -> ExitCode {
    let body = ErrorJson { error: ErrorBody { kind: err.kind(), message: err.to_string() } };
    println!("{}", serde_json::to_string_pretty(&body).expect("reports always serialize"));
    eprintln!("error: {err}");
    ExitCode::from(err.exit_code())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(err) = commands::apply_eps_override() {
        return fail(&err);
    }
    match commands::run(&cli.command) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe is not worth a panic.
            let _ = stdout.write_all(outcome.json.as_bytes());
            ExitCode::from(if outcome.holds { 0 } else { 1 })
        }
        Err(err) => fail(&err),
    }
}
