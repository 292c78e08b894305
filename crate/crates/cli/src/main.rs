#![forbid(unsafe_code)]

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rhocert_core::report::{run_check, CheckOptions};
use rhocert_core::{parse_spec, EngineOptions, Error};

mod render;
mod sweep;

use sweep::{Family, SweepFormat, SweepParams};

#[derive(Parser)]
#[command(
    name = "rhocert",
    version,
    about = "Exact certification of temperedness and square integrability of L2(G/H) \
             for reductive pairs, with discrete-series conclusions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check one pair from a JSON specification file.
    Check(CheckArgs),
    /// Sweep a parameter family and tabulate verdicts.
    Sweep(SweepArgs),
    /// Run the three classical-family sweeps at fixed desk-scale bounds.
    Atlas(AtlasArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckFormat {
    Text,
    Json,
}

#[derive(Args)]
struct CheckArgs {
    /// Path to the JSON pair specification.
    #[arg(long)]
    spec: PathBuf,
    #[arg(long, value_enum, default_value_t = CheckFormat::Text)]
    format: CheckFormat,
    /// Echo the three weight multisets in the report.
    #[arg(long)]
    verbose_weights: bool,
    /// Include wall-clock timing in the report. Off by default so repeated
    /// runs stay byte-identical.
    #[arg(long)]
    timing: bool,
    /// Cap on the number of distinct test rays collected during enumeration.
    #[arg(long, default_value_t = rhocert_core::DEFAULT_RAY_CAP)]
    max_rays: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Single n (sl-blocks).
    #[arg(long)]
    n: Option<u32>,
    /// Smallest n of a range.
    #[arg(long)]
    n_min: Option<u32>,
    /// Largest n of a range (sl-blocks, so-in-sl).
    #[arg(long)]
    n_max: Option<u32>,
    /// Smallest p+q (so-in-sl; default 3).
    #[arg(long)]
    pq_min: Option<u32>,
    /// Largest p+q (so-blocks).
    #[arg(long)]
    pq_max: Option<u32>,
    /// Fix the ambient p (so-blocks).
    #[arg(long)]
    p: Option<u32>,
    /// Fix the ambient q (so-blocks).
    #[arg(long)]
    q: Option<u32>,
    #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
    format: SweepFormat,
    /// Worker threads; results are emitted in parameter order either way.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cap on the number of distinct test rays collected during enumeration.
    #[arg(long, default_value_t = rhocert_core::DEFAULT_RAY_CAP)]
    max_rays: u64,
}

#[derive(Args)]
struct AtlasArgs {
    /// Worker threads; results are emitted in parameter order either way.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Cap on the number of distinct test rays collected during enumeration.
    #[arg(long, default_value_t = rhocert_core::DEFAULT_RAY_CAP)]
    max_rays: u64,
}

#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
    Io(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Io(m) => write!(f, "{m}"),
        }
    }
}

impl CliError {
    /// 2 for anything wrong with the input, 3 for resource caps. Verdict
    /// content never alters the exit code.
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::ResourceLimit { .. }) => 3,
            _ => 2,
        }
    }
}

fn run_check_command(args: &CheckArgs) -> Result<(), CliError> {
    let text = std::fs::read_to_string(&args.spec)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", args.spec.display())))?;
    let spec = parse_spec(&text)?;
    let opts = CheckOptions {
        engine: EngineOptions {
            ray_cap: args.max_rays,
        },
        verbose_weights: args.verbose_weights,
        with_timing: args.timing,
    };
    let report = run_check(&spec, &opts)?;
    match args.format {
        CheckFormat::Text => print!("{}", render::report_text(&report)),
        CheckFormat::Json => {
            let json =
                serde_json::to_string_pretty(&report).expect("report serialization is infallible");
            println!("{json}");
        }
    }
    Ok(())
}

fn run_sweep_command(args: &SweepArgs) -> Result<(), CliError> {
    let params = SweepParams::from_args(args)?;
    let engine = EngineOptions {
        ray_cap: args.max_rays,
    };
    let table = sweep::run_sweep(args.family, &params, &engine, args.jobs)?;
    print!("{}", table.render(args.format));
    Ok(())
}

fn run_atlas_command(args: &AtlasArgs) -> Result<(), CliError> {
    let engine = EngineOptions {
        ray_cap: args.max_rays,
    };
    print!("{}", sweep::run_atlas(&engine, args.jobs)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Check(args) => run_check_command(args),
        Command::Sweep(args) => run_sweep_command(args),
        Command::Atlas(args) => run_atlas_command(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
