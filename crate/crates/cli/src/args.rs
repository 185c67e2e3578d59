use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sl2_blocks::FiltrationKind;

#[derive(Debug, Parser)]
#[command(
    name = "sl2-blocks",
    version,
    about = "Blocks, PBW filtrations and adjoint decompositions of reduced enveloping algebras of sl2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List blocks with their idempotents, dimensions and coinvariants.
    Blocks(BlocksArgs),
    /// Cumulative and graded dimensions of the block filtrations.
    Filtration(FiltrationArgs),
    /// Run the full check suite.
    Verify(VerifyArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Blocks(_) => "blocks",
            Command::Filtration(_) => "filtration",
            Command::Verify(_) => "verify",
        }
    }

    pub fn common(&self) -> &Common {
        match self {
            Command::Blocks(a) => &a.common,
            Command::Filtration(a) => &a.common,
            Command::Verify(a) => &a.common,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum ChiTag {
    Zero,
    E,
    Regular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Pf,
    Int,
    Sh,
}

impl From<KindArg> for FiltrationKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Pf => FiltrationKind::Pf,
            KindArg::Int => FiltrationKind::Int,
            KindArg::Sh => FiltrationKind::Sh,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// A single odd prime.
    #[arg(long, conflicts_with = "max_p")]
    pub p: Option<u32>,
    /// Every odd prime from 3 up to this bound.
    #[arg(long)]
    pub max_p: Option<u32>,
    /// Parameter of the regular character `a h/2`; all of 1..p-1 when omitted.
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for independent (p, χ) jobs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Report wall time per job on stderr.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Debug, Clone, Args)]
pub struct BlocksArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "zero")]
    pub chi: Vec<ChiTag>,
}

#[derive(Debug, Clone, Args)]
pub struct FiltrationArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "zero")]
    pub chi: Vec<ChiTag>,
    /// Select the block by ω (nilpotent characters).
    #[arg(long, conflicts_with = "alpha")]
    pub omega: Option<u32>,
    /// Select the block by its Casimir scalar: a residue, or `[c0,c1,...]`
    /// over the extension field.
    #[arg(long)]
    pub alpha: Option<String>,
    /// Filtration kind; all three when omitted.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "zero,e")]
    pub chi: Vec<ChiTag>,
    /// Perturb the first idempotent before checking (exercises failure paths).
    #[arg(long, hide = true)]
    pub corrupt_idempotent: bool,
}
