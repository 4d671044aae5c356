use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use wreathspan::character::ExtConvention;

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "wreathspan",
    version,
    about = "Exact span dimensions of power characters of C_k wr S_n"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one span dimension with its bounds.
    Dims(DimsArgs),
    /// Compute a grid of span dimensions.
    Sweep(SweepArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Print the generating function of one class.
    Gf(GfArgs),
    /// Compare generating-function coefficients with brute-force traces.
    OracleCheck(OracleArgs),
}

/// `brauer` is `sym` with a required `--p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Sym,
    Ext,
    Brauer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GfKind {
    Sym,
    Ext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    True,
    Paper,
}

impl From<ConventionArg> for ExtConvention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::True => ExtConvention::True,
            ConventionArg::Paper => ExtConvention::Paper,
        }
    }
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Line-delimited JSON report cache.
    #[arg(long, env = "WREATHSPAN_CACHE")]
    pub cache: Option<PathBuf>,
    /// Ignore the cache even if one is configured.
    #[arg(long)]
    pub no_cache: bool,
    /// Truncation order override for the coefficient matrices.
    #[arg(long)]
    pub truncation: Option<usize>,
    /// Lift the desk-scale caps.
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    #[arg(long)]
    pub p: Option<u64>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(value_enum)]
    pub kind: KindArg,
    /// Values of n: `a..b`, `a..=b`, `a,b,c` or a single value.
    #[arg(long, value_parser = parse_range)]
    pub n: Range,
    #[arg(long, value_parser = parse_range, default_value = "1")]
    pub k: Range,
    #[arg(long, value_parser = parse_range)]
    pub p: Option<Range>,
    /// Concurrent rows; defaults to the number of cores.
    #[arg(long)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Criterion ids or numbers, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Print the criterion list and exit.
    #[arg(long)]
    pub list: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GfArgs {
    #[arg(long, value_enum, default_value_t = GfKind::Sym)]
    pub kind: GfKind,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Cycle lengths, comma separated.
    #[arg(
        long,
        value_delimiter = ',',
        conflicts_with = "identity",
        required_unless_present = "identity"
    )]
    pub parts: Vec<usize>,
    /// Cycle-product exponents, comma separated; defaults to all zero.
    #[arg(long, value_delimiter = ',')]
    pub exponents: Vec<u32>,
    /// Use the identity class of C_k wr S_n.
    #[arg(long, value_name = "N")]
    pub identity: Option<usize>,
    /// Highest coefficient printed.
    #[arg(long)]
    pub order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(value_enum)]
    pub kind: GfKind,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Highest power checked.
    #[arg(long, default_value_t = 6)]
    pub r: usize,
    #[arg(long, value_enum, default_value_t = ConventionArg::True)]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Lift the default n <= 4, k <= 3, r <= 6 caps (oracle limits still apply).
    #[arg(long)]
    pub allow_large: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Range(pub Vec<u64>);

pub fn parse_range(s: &str) -> Result<Range> {
    let num = |t: &str| -> Result<u64> {
        t.trim()
            .parse::<u64>()
            .with_context(|| format!("`{t}` is not a non-negative integer"))
    };
    let values: Vec<u64> = if let Some((a, b)) = s.split_once("..=") {
        (num(a)?..=num(b)?).collect()
    } else if let Some((a, b)) = s.split_once("..") {
        (num(a)?..=num(b)?).collect()
    } else {
        s.split(',').map(num).collect::<Result<_>>()?
    };
    if values.is_empty() {
        bail!("range `{s}` is empty");
    }
    Ok(Range(values))
}
