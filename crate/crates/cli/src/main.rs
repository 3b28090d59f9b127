//! `liehess`: command line access to root systems, Hessenberg ideal fibers
//! and the G2 dot action.
//!
//! Exit codes: 0 on success, 2 for configuration errors (unknown names,
//! malformed config files), 3 when a computation fails, 1 when the output
//! cannot be written.

mod commands;
mod config;
mod error;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::{Format, RunConfig};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "liehess", version, about = "Root systems, Hessenberg ideal fibers and G2 dot actions")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Root system type such as G2, F4, E6 or B3 (default G2).
    #[arg(long = "type", global = true)]
    type_label: Option<String>,

    /// Nilpotent orbit key or label, e.g. G2a1 or "G2(a1)".
    #[arg(long, global = true)]
    orbit: Option<String>,

    /// Hessenberg ideal key, label or generator list, e.g. I_beta_alpha.
    #[arg(long, global = true)]
    ideal: Option<String>,

    /// Comma separated simple roots spanning a Levi, e.g. alpha,beta; an
    /// empty value selects the empty set.
    #[arg(long, global = true, allow_hyphen_values = true)]
    levi: Option<String>,

    /// Output encoding.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Flat `key = value` file with defaults for the flags above.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the positive roots.
    Roots,
    /// Describe the Weyl group.
    Weyl,
    /// List the Hessenberg ideals.
    Ideals,
    /// List the registered nilpotent orbits.
    Orbits,
    /// Affine pavings of Hessenberg ideal fibers.
    Fibers {
        /// Classify the stable subspaces of 𝔤(2) for an F4 or E6 orbit.
        #[arg(long)]
        quintuples: bool,
    },
    /// Quintuple data per coset representative, or the F4/E6 classification.
    Quintuples,
    /// Cell dimensions and Betti numbers of regular Hessenberg varieties.
    Betti,
    /// Graded characters of the dot action in type G2.
    DotAction,
}

fn run(cli: Cli) -> Result<(), CliError> {
    let flags = RunConfig {
        type_label: cli.type_label,
        orbit: cli.orbit,
        ideal: cli.ideal,
        levi: cli.levi,
        format: cli.format,
        out: cli.out,
        quintuples: matches!(cli.command, Command::Fibers { quintuples: true }),
    };
    let cfg = match &cli.config {
        Some(path) => flags.over(RunConfig::load(path)?),
        None => flags,
    };
    let sel = commands::validate(&cfg)?;
    let report = match cli.command {
        Command::Roots => commands::roots(&sel)?,
        Command::Weyl => commands::weyl(&sel)?,
        Command::Ideals => commands::ideals(&sel)?,
        Command::Orbits => commands::orbits(&sel)?,
        Command::Fibers { .. } => commands::fibers(&sel)?,
        Command::Quintuples => commands::quintuples(&sel)?,
        Command::Betti => commands::betti(&sel)?,
        Command::DotAction => commands::dot_action(&sel)?,
    };
    let rendered = report.render(cfg.format.unwrap_or_default())?;
    match &cfg.out {
        Some(path) => std::fs::write(path, rendered)?,
        None => std::io::stdout().lock().write_all(rendered.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("liehess: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
