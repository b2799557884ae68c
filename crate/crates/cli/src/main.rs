//! `midi`: dependence estimation from the command line.
//!
//! Exit codes: 0 success, 2 input error, 3 degenerate data.

mod alloc;
mod commands;
mod config;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[global_allocator]
static GLOBAL: alloc::CountingAlloc = alloc::CountingAlloc;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<midi_core::Error> for CliError {
    fn from(e: midi_core::Error) -> Self {
        let code = match e {
            midi_core::Error::DegenerateAxis { .. } => 3,
            _ => 2,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "midi", version, about = "Maximal-spacing histogram dependence index and baselines")]
struct Cli {
    /// Flat key = value settings file (keys: seed, jobs, c, reps, n).
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Estimate dependence between two columns of a CSV file.
    Compute(ComputeArgs),
    /// Write a synthetic dataset as `x,y` CSV.
    Generate(GenerateArgs),
    /// Monte Carlo power curve over 30 noise levels.
    Power(PowerArgs),
    /// Rank every column of a matrix against a reference column.
    Screen(ScreenArgs),
    /// Time each measure on generated data of several sizes.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    pub input: PathBuf,
    /// Column name or zero-based index.
    #[arg(long, default_value = "0")]
    pub x_col: String,
    #[arg(long, default_value = "1")]
    pub y_col: String,
    /// Comma-separated list from midi, dcor, pearson, spearman.
    #[arg(long, default_value = "midi")]
    pub measure: String,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub out: ReportFormat,
    /// Allow distance correlation above the quadratic-memory guard.
    #[arg(long)]
    pub force: bool,
}

#[derive(Args, Debug)]
pub struct GenerateArgs {
    /// Relationship tag, e.g. line, circle, normal_bivariate:0.9.
    pub kind: String,
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, conflicts_with = "noise_gaussian_sigma")]
    pub noise_uniform_var: Option<f64>,
    #[arg(long)]
    pub noise_gaussian_sigma: Option<f64>,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct PowerArgs {
    #[arg(long, default_value = "midi")]
    pub measure: String,
    #[arg(long)]
    pub function: String,
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(short = 'n', long = "n")]
    pub n: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ScreenArgs {
    pub input: PathBuf,
    /// Reference column name or zero-based index.
    #[arg(long = "ref")]
    pub reference: String,
    /// MIDI is always computed; dcor, pearson and spearman are optional.
    #[arg(long, default_value = "midi")]
    pub measures: String,
    #[arg(long)]
    pub c: Option<f64>,
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
    pub format: TableFormat,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Comma-separated sample sizes; scientific notation such as 1e5 is accepted.
    #[arg(long, default_value = "1e4,1e5,1e6")]
    pub sizes: String,
    #[arg(long, default_value = "midi,dcor")]
    pub measures: String,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Allow distance correlation above the quadratic-memory guard.
    #[arg(long)]
    pub force: bool,
    #[arg(short = 'o', long = "output")]
    pub output: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config::ConfigFile::load(cli.config.as_deref()).and_then(|cfg| match &cli.command {
        Command::Compute(a) => commands::compute(a, &cfg),
        Command::Generate(a) => commands::generate(a, &cfg),
        Command::Power(a) => commands::power(a, &cfg),
        Command::Screen(a) => commands::screen(a, &cfg),
        Command::Bench(a) => commands::bench(a, &cfg),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code)
        }
    }
}
