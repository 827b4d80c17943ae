//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use repgrowth::interval::{Precision, MAX_PRECISION};
use repgrowth::partitions::Partition;
use repgrowth::rootdata::{Family, Weight};

#[derive(Debug, Parser)]
#[command(name = "repgrowth", version, about = "Bounds, witnesses and verification suites for counting small representations")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Starting working precision in bits; certification may double it up to 1024.
    #[arg(long, global = true, default_value_t = 256, value_parser = clap::value_parser!(u32).range(16..=MAX_PRECISION as i64))]
    pub prec: u32,

    /// Ceiling on enumerated sets.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub cap: usize,

    #[arg(long, global = true, value_enum, default_value_t = Scale::Desk)]
    pub scale: Scale,

    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn precision(&self) -> Precision {
        Precision {
            start: self.prec,
            max: MAX_PRECISION,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Size of the exhaustive enumerations in `verify`. Single certified
/// evaluations run at every scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Desk,
    Extended,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bound on the number of irreducibles of dimension at most n.
    Bound(BoundArgs),
    /// Run a dominance-witness engine and recheck its output.
    Witness(WitnessArgs),
    /// Count restricted weights whose dimension lower bound is at most n.
    Enumerate(EnumerateArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
    /// Mullineux image of a p-regular partition.
    Mullineux(MullineuxArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_weight(s: &str) -> Result<Weight, String> {
    s.parse()
}

fn parse_biguint(s: &str) -> Result<BigUint, String> {
    s.parse().map_err(|e| format!("`{s}`: {e}"))
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: repgrowth::Error| e.to_string())
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long, value_parser = parse_biguint)]
    pub n: BigUint,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    Incr,
    Middle,
    MGood,
    Middle2,
    Good,
    A5,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[arg(value_enum)]
    pub engine: Engine,
    #[arg(long)]
    pub rank: usize,
    /// Comma-separated coefficients in the fundamental-weight basis.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: Weight,
    /// Window parameter for incr, middle and m-good.
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LowerBound {
    Nlambda,
    Premet,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = parse_family)]
    pub family: Family,
    #[arg(long)]
    pub rank: usize,
    #[arg(long)]
    pub p: u64,
    #[arg(long)]
    pub n_max: u64,
    #[arg(long, value_enum)]
    pub bound: LowerBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, serde::Serialize, serde::Deserialize)]
pub enum SuiteId {
    #[value(name = "typeA")]
    #[serde(rename = "typeA")]
    TypeA,
    #[value(name = "char2")]
    #[serde(rename = "char2")]
    Char2,
    #[value(name = "nonA")]
    #[serde(rename = "nonA")]
    NonA,
    #[value(name = "partitions")]
    #[serde(rename = "partitions")]
    Partitions,
    #[value(name = "symmetric")]
    #[serde(rename = "symmetric")]
    Symmetric,
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub suite: SuiteId,
}

#[derive(Debug, Args)]
pub struct MullineuxArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, value_parser = parse_partition)]
    pub partition: Partition,
}
