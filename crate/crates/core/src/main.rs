use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use zonecheck::harness::{run_experiment, ExperimentConfig, Fixture, HarnessError, Mode, DEFAULT_MAX_N};
use zonecheck::io::{emit_csv, parse_line_literal, parse_lines_file, parse_plane_literal, parse_planes_file};

#[derive(Parser)]
#[command(name = "zonecheck", version, about = "Exact zone computations in line and plane arrangements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check per-cell Euler identities and census counts.
    EulerChecks(RunArgs),
    /// Zone of a query line among lines in the plane.
    Zone2d(RunArgs),
    /// Zone of a query plane among planes in space.
    Zone3d(RunArgs),
    /// Check the pair-counting inequality for every plane.
    Theorem1(RunArgs),
    /// Check the summed identity and recurrence.
    Recurrence(RunArgs),
    /// Zone sizes over a range of n, with a fitted growth summary.
    Sweep(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    coeff_bound: i64,
    /// Planes, one `a b c d` per line; replaces random generation.
    #[arg(long)]
    planes_file: Option<PathBuf>,
    /// Query plane `a b c d`.
    #[arg(long, allow_hyphen_values = true)]
    s_plane: Option<String>,
    /// Lines, one `a b c` per line (zone2d).
    #[arg(long)]
    lines_file: Option<PathBuf>,
    /// Query line `a b c` (zone2d).
    #[arg(long, allow_hyphen_values = true)]
    s_line: Option<String>,
    /// CSV destination; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Raise the ceiling on n.
    #[arg(long)]
    max_n_override: Option<usize>,
}

fn config_from(mode: Mode, args: RunArgs) -> Result<ExperimentConfig, HarnessError> {
    let mut fixture = Fixture::default();
    if let Some(path) = &args.planes_file {
        fixture.planes = Some(parse_planes_file(path)?);
    }
    if let Some(path) = &args.lines_file {
        fixture.lines = Some(parse_lines_file(path)?);
    }
    if let Some(s) = &args.s_plane {
        fixture.query_plane = Some(parse_plane_literal(s, 0)?);
    }
    if let Some(s) = &args.s_line {
        fixture.query_line = Some(parse_line_literal(s, 0)?);
    }
    Ok(ExperimentConfig {
        mode,
        n_min: args.n_min,
        n_max: args.n_max,
        trials_per_n: args.trials,
        seed: args.seed,
        coefficient_bound: args.coeff_bound,
        max_n: args.max_n_override.unwrap_or(DEFAULT_MAX_N),
        fixture,
        out: args.out,
    })
}

fn run(cli: Cli) -> Result<(), HarnessError> {
    let (mode, args) = match cli.command {
        Command::EulerChecks(a) => (Mode::EulerChecks, a),
        Command::Zone2d(a) => (Mode::Zone2d, a),
        Command::Zone3d(a) => (Mode::Zone3d, a),
        Command::Theorem1(a) => (Mode::Theorem1, a),
        Command::Recurrence(a) => (Mode::Recurrence, a),
        Command::Sweep(a) => (Mode::Sweep, a),
    };
    let config = config_from(mode, args)?;
    let output = run_experiment(&config)?;
    match &config.out {
        Some(path) => emit_csv(&output.table, path)?,
        None => print!("{}", output.table.render()),
    }
    eprint!("{}", output.summary);
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
