mod args;
mod commands;
mod error;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Settings};
use error::CliError;

fn run(cli: Cli) -> Result<(), CliError> {
    let settings = Settings::load(cli.config.as_deref(), commands::keys_for(&cli.command))?;
    if let Some(threads) = settings.get::<usize>("threads", &cli.threads)? {
        if threads == 0 {
            return Err(CliError::Config("--threads: must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Config(format!("--threads: {e}")))?;
    }
    match cli.command {
        Command::Sweep(a) => commands::sweep(a, &settings),
        Command::Dynamics(a) => commands::dynamics(a, &settings),
        Command::Exact(a) => commands::exact(a, &settings),
        Command::Validate(a) => commands::validate(a, &settings),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("scramble: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
