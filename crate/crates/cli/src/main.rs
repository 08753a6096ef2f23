//! `qtf` command-line tool.
//!
//! Exit codes: 0 success, 1 usage or configuration error, 2 data error.
//! Reports go to stdout (or `--out`), diagnostics to stderr.

mod analyze;
mod budget;
mod constants;
mod error;
mod output;
mod simulate;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::CliResult;

#[derive(Debug, Parser)]
#[command(
    name = "qtf",
    version,
    about = "Collapse-solvency, energy-budget and track-statistics toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the physical constants and reference values.
    Constants(constants::ConstantsArgs),
    /// Run the track-radius pipeline on a CSV file.
    Analyze(analyze::AnalyzeArgs),
    /// Evaluate the thermodynamic energy budget and audit it.
    Budget(budget::BudgetArgs),
    /// Run a seeded simulation described by a TOML or JSON config.
    Simulate(simulate::SimulateArgs),
    /// Print the synthetic 228-track fixture as CSV.
    Fixture(OutArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Constants(args) => constants::run(args),
        Command::Analyze(args) => analyze::run(args),
        Command::Budget(args) => budget::run(args),
        Command::Simulate(args) => simulate::run(args),
        Command::Fixture(args) => output::write_output(
            args.out.as_deref(),
            &qtf_core::tracks::fixture::fixture_csv(),
        ),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qtf: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
