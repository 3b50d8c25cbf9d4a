//! Command-line entry point.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use negchan_cli::error::{CliError, Result};
use negchan_cli::report::run_report;
use negchan_cli::scenario::ScenarioConfig;
use negchan_cli::sweep::{run_sweep, GridAxis, Pipeline};
use negchan_cli::verify::run_all_checks;

#[derive(Parser)]
#[command(
    name = "negchan",
    version,
    about = "Choi-matrix reports, negativity sweeps, and cross-checks for qubit \
             channels with correlated preparations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Choi matrix, spectrum, and negativity for one scenario.
    Report {
        /// Scenario JSON file.
        #[arg(long)]
        scenario: PathBuf,
    },
    /// Tabulate negativity over a coupling/time grid and write it as CSV.
    Sweep {
        /// Scenario JSON file; its dynamics must be a named Hamiltonian.
        #[arg(long)]
        scenario: PathBuf,
        /// Coupling axis as min:max:count.
        #[arg(long)]
        k: GridAxis,
        /// Time axis as min:max:count.
        #[arg(long)]
        t: GridAxis,
        /// CSV output path.
        #[arg(long)]
        out: PathBuf,
        /// Optional grayscale heatmap output path.
        #[arg(long)]
        svg: Option<PathBuf>,
        /// How each cell's negativity is computed.
        #[arg(long, value_enum, default_value_t = Pipeline::Analytic)]
        pipeline: Pipeline,
    },
    /// Run the built-in cross-check suite and report one line per check.
    Verify,
}

fn load_scenario(path: &Path) -> Result<ScenarioConfig> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
    ScenarioConfig::from_json(&text)
        .map_err(|source| CliError::Json { path: path.to_path_buf(), source })
}

fn write_text(path: &Path, content: &str) -> Result<()> {
    std::fs::write(path, content)
        .map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

/// Worker cap from NEGCHAN_THREADS; absent means the runtime default.
fn thread_cap() -> Result<Option<usize>> {
    match std::env::var("NEGCHAN_THREADS") {
        Ok(value) => match value.trim().parse::<usize>() {
            Ok(parsed) if parsed > 0 => Ok(Some(parsed)),
            _ => Err(CliError::Config(format!(
                "NEGCHAN_THREADS must be a positive integer, got `{value}`"
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(CliError::Config(format!("cannot read NEGCHAN_THREADS: {e}"))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Report { scenario } => {
            let config = load_scenario(&scenario)?;
            print!("{}", run_report(&config)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { scenario, k, t, out, svg, pipeline } => {
            let config = load_scenario(&scenario)?;
            let result = run_sweep(&config, k, t, pipeline, thread_cap()?)?;
            write_text(&out, &result.to_csv())?;
            println!("wrote {} cells to {}", result.rows().len(), out.display());
            if let Some(path) = svg {
                write_text(&path, &result.to_svg())?;
                println!("wrote heatmap to {}", path.display());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify => {
            let outcomes = run_all_checks();
            for outcome in &outcomes {
                println!("{}", outcome.line());
            }
            let failed = outcomes.iter().filter(|outcome| !outcome.passed).count();
            if failed == 0 {
                println!("all {} checks passed", outcomes.len());
                Ok(ExitCode::SUCCESS)
            } else {
                println!("{failed} of {} checks failed", outcomes.len());
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
