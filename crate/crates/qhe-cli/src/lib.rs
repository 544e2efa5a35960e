//! `qhe` — cycles, figures, sweeps, and randomized verification for the
//! measurement-fueled coupled-qubit heat engine.
//!
//! Exit codes: 0 success, 1 invalid input, 2 valid run that is not an engine
//! (`W_T <= 0`), 3 verification failure.

use clap::Parser;

pub mod args;
pub mod commands;
pub mod config;
pub mod csvio;
pub mod figures;
pub mod sampling;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_AN_ENGINE: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

pub fn run() -> i32 {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap help/version output is not an error.
            use clap::error::ErrorKind;
            let kind = err.kind();
            let _ = err.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                EXIT_OK
            } else {
                EXIT_INVALID
            };
        }
    };
    let outcome = match cli.command {
        args::Command::Cycle(a) => commands::cycle::run(&a),
        args::Command::Figure(a) => commands::figure::run(&a),
        args::Command::Sweep(a) => commands::sweep::run(&a),
        args::Command::Verify(a) => commands::verify::run(&a),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            EXIT_INVALID
        }
    }
}
