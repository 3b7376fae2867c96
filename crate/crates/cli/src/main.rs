use clap::{Parser, Subcommand};
use ineqforge_cli::{commands, OutputFormat, RunConfig};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact-arithmetic certification of generalized Damascus inequalities and
/// their sum-one variants: feasibility table, certificates, violation-set
/// exploration, consolidated reports.
#[derive(Parser)]
#[command(name = "ineqforge", version)]
struct Cli {
    /// Largest exponent n in table sweeps.
    #[arg(long, default_value_t = 10, global = true)]
    n_max: u32,

    /// Lower grid endpoint (exact fraction, e.g. 1/10).
    #[arg(long, default_value = "1/10", global = true)]
    grid_lo: String,

    /// Upper grid endpoint (exact fraction).
    #[arg(long, default_value = "10", global = true)]
    grid_hi: String,

    /// Subdivisions per axis (points per axis = steps + 1).
    #[arg(long, default_value_t = 200, global = true)]
    grid_steps: u32,

    /// Exponents to explore, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "3,4,5,6", global = true)]
    n_values: Vec<u32>,

    /// Output directory for JSON/CSV artifacts.
    #[arg(long, default_value = "ineqforge-out", global = true)]
    out: PathBuf,

    /// Stdout rendering: text, json, or csv.
    #[arg(long, default_value = "text", global = true)]
    format: String,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rebuild the (m, n) feasibility table with certificates and witnesses.
    VerifyTable,
    /// Run one certificate: m3n3, m5n1, ineq-1..ineq-12, ineq-all, m2-n<k>.
    Certify { claim: String },
    /// Scan the exploration grid and write samples, regions, and nested checks.
    Explore,
    /// Merge the artifacts in the output directory into one report.
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format: OutputFormat = match cli.format.parse() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(2);
        }
    };
    let config = match RunConfig::new(
        cli.n_max,
        &cli.grid_lo,
        &cli.grid_hi,
        cli.grid_steps,
        &cli.n_values,
        cli.out,
        format,
    ) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{e:#}");
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::VerifyTable => commands::cmd_verify_table(&config),
        Command::Certify { claim } => commands::cmd_certify(&config, claim),
        Command::Explore => commands::cmd_explore(&config),
        Command::Report => commands::cmd_report(&config),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("{e:#}");
            ExitCode::from(2)
        }
    }
}
