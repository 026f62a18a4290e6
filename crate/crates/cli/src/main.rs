//! `squeeze` — command-line front end for the squeezed-state library.
//!
//! Subcommands: `convert`, `trajectory`, `sample`, `wigner`, `verify`.
//! Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

mod commands;
mod options;
mod output;

use clap::Parser;

use options::{Cli, Command};

/// Usage and domain errors; both map to exit code 2 with a one-line
/// diagnostic on stderr.
pub struct CliError {
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { message: message.into() }
    }

    fn domain(err: impl std::fmt::Display) -> Self {
        CliError { message: err.to_string() }
    }
}

fn main() {
    // clap itself exits with code 2 on malformed flags
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {}", err.message);
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Convert { state } => commands::convert(state),
        Command::Trajectory { state, t_grid, io } => commands::trajectory(state, t_grid, io),
        Command::Sample { state, t, x_grid, io } => commands::sample(state, *t, x_grid, io),
        Command::Wigner { state, t, x_grid, p_grid, io } => {
            commands::wigner_grid(state, *t, x_grid, p_grid, io)
        }
        Command::Verify { suite, seed, tol, perturb_u, out } => {
            commands::verify(suite, *seed, tol, *perturb_u, out)
        }
    }
}
