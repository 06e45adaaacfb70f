//! `brauer-blocks`: command-line access to block classification in `B(δ)`.

mod commands;
mod verify;

use std::process::ExitCode;

use brauer_blocks::{parse_partition, parse_rational, Partition, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "brauer-blocks", version, about = "Blocks of the Brauer category B(δ) over ℂ")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for enumeration and verification (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub(crate) fn delta_arg(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

pub(crate) fn partition_arg(text: &str) -> Result<Partition, String> {
    parse_partition(text).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
pub struct DeltaArg {
    /// The parameter δ: an integer such as `-2` or a fraction such as `7/2`.
    #[arg(long, value_parser = delta_arg, allow_hyphen_values = true)]
    pub delta: Rational,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[command(flatten)]
    pub delta: DeltaArg,
    /// Left label, e.g. `2,1` (empty string for ∅).
    #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
    pub lhs: Partition,
    /// Right label.
    #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
    pub rhs: Partition,
}

#[derive(Args, Debug)]
pub struct LabelArgs {
    #[command(flatten)]
    pub delta: DeltaArg,
    /// Partition labelling the simple module, e.g. `2,2` (empty string for ∅).
    #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
    pub partition: Partition,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum WedgeOp {
    /// Chevalley raising operator e_i.
    E,
    /// Chevalley lowering operator f_i.
    F,
    /// b_i = e_i + f_{-i}.
    B,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Decide whether L(lhs) and L(rhs) lie in the same block.
    SameBlock(PairArgs),
    /// Canonical block key of L(partition).
    BlockKey(LabelArgs),
    /// List the members of the block of L(partition) up to a size bound.
    Block {
        #[command(flatten)]
        label: LabelArgs,
        /// Largest member size listed (default: size of the label + 8).
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Whether the bar-weight class of L(partition) is one block or splits in two.
    ClassifyWeightClass(LabelArgs),
    /// Blocks of the Brauer algebra B_n(δ).
    BrauerBlocks {
        #[command(flatten)]
        delta: DeltaArg,
        #[arg(long)]
        n: usize,
    },
    /// Brute-force dot-action orbit membership on λ^t-level labels.
    DotOrbit {
        #[command(flatten)]
        pair: PairArgs,
        /// Rank of W_n.
        #[arg(long)]
        n: usize,
        /// Allow n above the default cap of 8.
        #[arg(long)]
        allow_large_rank: bool,
    },
    /// Central character C(u) on the standard module Δ(partition).
    CentralChar(LabelArgs),
    /// Compare central characters of two standard modules.
    CentrallyEquivalent(PairArgs),
    /// Check O(u)O(-u) = (1/2-u)(1/2+u) and admissibility at truncation order K.
    SeriesCheck {
        #[command(flatten)]
        delta: DeltaArg,
        /// Truncation order K.
        #[arg(long, default_value_t = 24)]
        order: usize,
        /// Explicit γ_0, γ_1, … (comma-separated rationals) instead of δ((δ-1)/2)^a.
        #[arg(long, allow_hyphen_values = true)]
        gammas: Option<String>,
    },
    /// Apply e_i, f_i or b_i to the wedge basis vector of a charged sequence.
    WedgeApply {
        #[command(flatten)]
        delta: DeltaArg,
        /// Shape of the charged sequence (charge δ/2 - 1).
        #[arg(long, value_parser = partition_arg, allow_hyphen_values = true)]
        shape: Partition,
        #[arg(long, value_enum)]
        op: WedgeOp,
        /// Index i in (δ-1)/2 + ℤ, e.g. `1/2` or `-3/2`.
        #[arg(long, value_parser = delta_arg, allow_hyphen_values = true)]
        index: Rational,
    },
    /// Run every cross-check and report pass/fail.
    Verify(verify::VerifyArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli.command) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable")),
                Format::Text => print!("{}", out.text),
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
