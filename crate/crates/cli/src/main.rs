mod abelian;
mod args;
mod asymptotic;
mod bounds;
mod config;
mod error;
mod group;
mod output;
mod quadratic;

use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use error::{CliError, Result};
use output::Sink;

const SUBCOMMANDS: [&str; 5] = ["group", "quadratic", "abelian", "asymptotic", "bounds"];
const GLOBAL_VALUED: [&str; 4] = ["--config", "--out", "--format", "--jobs"];

/// The `--config` path and the subcommand path, read from the raw arguments so that the
/// config can supply options clap would otherwise demand.
fn prescan(argv: &[OsString]) -> (Option<PathBuf>, Vec<&str>) {
    let mut config = None;
    let mut path = Vec::new();
    let mut it = argv.iter().skip(1).filter_map(|a| a.to_str());
    while let Some(tok) = it.next() {
        if let Some(v) = tok.strip_prefix("--config=") {
            config = Some(PathBuf::from(v));
        } else if GLOBAL_VALUED.contains(&tok) {
            let v = it.next();
            if tok == "--config" {
                config = v.map(PathBuf::from);
            }
        } else if path.is_empty() && SUBCOMMANDS.contains(&tok) {
            path.push(tok);
        } else if path == ["asymptotic"] && (tok == "predict" || tok == "fit") {
            path.push(tok);
        }
    }
    (config, path)
}

fn load(argv: Vec<OsString>) -> Result<Cli> {
    let (config, path) = prescan(&argv);
    let argv = match &config {
        Some(file) if !path.is_empty() => config::splice(&argv, &path, &config::read_config(file)?)?,
        _ => argv,
    };
    Ok(Cli::try_parse_from(&argv).unwrap_or_else(|e| e.exit()))
}

fn run(cli: &Cli) -> Result<()> {
    if let Some(k) = cli.jobs {
        if k == 0 {
            return error::usage("--jobs must be at least 1");
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let sink = Sink::new(cli.out.clone(), cli.format);
    match &cli.command {
        Command::Group(a) => group::run(a, &sink),
        Command::Quadratic(a) => quadratic::run(a, &sink),
        Command::Abelian(a) => abelian::run(a, &sink),
        Command::Asymptotic(a) => asymptotic::run(a, &sink),
        Command::Bounds(a) => bounds::run(a, &sink),
    }
}

fn main() -> ExitCode {
    let outcome = load(std::env::args_os().collect()).and_then(|cli| {
        let level = match cli.verbose {
            0 => "warn",
            1 => "info",
            _ => "debug",
        };
        env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
        run(&cli)
    });
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
