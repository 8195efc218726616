mod args;
mod commands;
mod config;
mod error;
mod manifest;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use crate::args::{Cli, Command};
use crate::commands::{Context, Status};
use crate::config::Config;
use crate::error::CliError;
use crate::manifest::{manifest_path, RunManifest};

const EXIT_USAGE: u8 = 1;

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Labelings(_) => "labelings",
        Command::Factor(_) => "factor",
        Command::Spectrum(_) => "spectrum",
        Command::Search(_) => "search",
        Command::Sweep(_) => "sweep",
        Command::Verify(_) => "verify",
    }
}

fn run(cli: Cli) -> Result<Status, CliError> {
    let mut manifest = RunManifest::start(std::env::args().collect(), command_name(&cli.command));
    let config = match &cli.config {
        Some(path) => {
            let bytes = manifest.read_input(path)?;
            Config::parse(&bytes, path)?
        }
        None => Config::default(),
    };
    let threads = cli.threads.or(config.threads);
    if let Some(n) = threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // Fails only if a pool already exists, which cannot happen this early.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let mut ctx = Context {
        config,
        threads,
        format: cli.format,
        output: cli.output.clone(),
        manifest,
    };
    let status = match &cli.command {
        Command::Labelings(a) => commands::labelings(a, &mut ctx)?,
        Command::Factor(a) => commands::factor(a, &mut ctx)?,
        Command::Spectrum(a) => commands::spectrum(a, &mut ctx)?,
        Command::Search(a) => commands::search(a, &mut ctx)?,
        Command::Sweep(a) => commands::sweep_cmd(a, &mut ctx)?,
        Command::Verify(a) => commands::verify_cmd(a, &mut ctx)?,
    };
    if let Some(out) = &cli.output {
        let mut manifest = ctx.manifest;
        manifest.outputs.push(out.display().to_string());
        manifest.write(&manifest_path(out), status.code())?;
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let level = match cli.verbose {
        0 => "warn",
        1 => "info",
        2 => "debug",
        _ => "trace",
    };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(status) => ExitCode::from(status.code() as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
