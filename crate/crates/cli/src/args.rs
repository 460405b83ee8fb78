use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use omega_engine::Method;
use polytope_bergman::IdentityKind;

#[derive(Debug, Parser)]
#[command(name = "omega", version, about = "Top g-coefficients of matroids, computed several ways")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute ω for each input matroid.
    Compute(ComputeArgs),
    /// Check the indicator-function identities at sample points.
    CheckIdentities(IdentityArgs),
    /// Write a reproducible corpus of matroid specs.
    Random(RandomArgs),
    /// Time every chain-sum variant and compare chain counts.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Matroid spec files: one object, an array, or one object per line.
    #[arg(short = 'i', long = "input")]
    pub inputs: Vec<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; defaults to one per core.
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub config: RunConfig,
    /// auto, all, closed-form, schubert, or a chain-sum variant.
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    pub method: Method,
}

#[derive(Debug, Clone, Args)]
pub struct IdentityArgs {
    #[command(flatten)]
    pub config: RunConfig,
    /// Pseudorandom points per matroid, besides the hypersimplex vertices.
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    /// Only this identity; all four by default.
    #[arg(long, value_parser = parse_kind)]
    pub kind: Option<IdentityKind>,
    /// Point batch file instead of sampling.
    #[arg(long)]
    pub points: Option<PathBuf>,
    /// Every point whose coordinates have denominator at most this, in
    /// [-1, 2], instead of sampling.
    #[arg(long)]
    pub grid: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Schubert matroids from a random chain and profile.
    Schubert,
    /// Matroids represented over a small prime field.
    Linear,
    /// Duals, minors, direct sums and parallel extensions of the above.
    Closure,
}

#[derive(Debug, Clone, Args)]
pub struct RandomArgs {
    #[command(flatten)]
    pub config: RunConfig,
    #[arg(long, value_enum, default_value_t = Family::Schubert)]
    pub family: Family,
    /// Ground set size; an upper bound for `closure`.
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Rank; random when absent.
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub config: RunConfig,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<IdentityKind, String> {
    s.parse()
}
