use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "kzrat", version, about = "Exact rational basis solutions of the 3x3 KZ system")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct, verify and emit the basis solutions.
    Basis(GenerateArgs),
    /// Emit the expansion coefficients at infinity of the selected chains.
    Series(GenerateArgs),
    /// Check that every solution in a JSON file solves the system.
    Verify(VerifyArgs),
    /// Compare computed values against the embedded printed formulas.
    Audit(OutputArgs),
    /// Certify linear independence of three solutions.
    Independence(IndependenceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Keep z1, z2 as symbols (default).
    #[arg(long, conflicts_with_all = ["z1", "z2"])]
    pub symbolic: bool,
    #[arg(long, requires = "z2", allow_hyphen_values = true)]
    pub z1: Option<String>,
    #[arg(long, requires = "z1", allow_hyphen_values = true)]
    pub z2: Option<String>,
    #[arg(long, default_value_t = kzrat_core::series::DEFAULT_K_MAX, allow_hyphen_values = true)]
    pub kmax: i64,
    /// w1, w2, w3 or all.
    #[arg(long, default_value = "all")]
    pub seed: String,
    /// Order of an explicit seed; overrides --seed.
    #[arg(long, requires = "seed_vector", allow_hyphen_values = true)]
    pub seed_order: Option<i64>,
    /// Comma-separated scalar entries of an explicit seed vector.
    #[arg(long, requires = "seed_order", allow_hyphen_values = true)]
    pub seed_vector: Option<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub file: PathBuf,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct IndependenceArgs {
    /// Files holding three solutions in total.
    #[arg(required = true, num_args = 1..=3)]
    pub files: Vec<PathBuf>,
    #[command(flatten)]
    pub output: OutputArgs,
}
