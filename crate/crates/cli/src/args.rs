//! Command-line surface. One subcommand per verifier; every run is described
//! by a prime, a mode, and optional checkpoint/report paths.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "zerosum",
    version,
    about = "Exact verifiers for zero-sum phenomena in prime-field planes",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Sweep canonical covering sets and assert a zero-sum witness for each.
    VerifyTheorem1(VerifyTheorem1Args),
    /// Certify that the product of the two form powers has no monomial using
    /// every variable.
    Lemma5(Lemma5Args),
    /// Cross-check the signed cube sum on seeded random polynomials.
    Integral(IntegralArgs),
    /// Find a zero-sum subset of the input set, if one exists.
    FindZerosum(FindZerosumArgs),
    /// Subset-sum images of the input set.
    Sigma(SigmaArgs),
    /// Exact Olson constant by branch-and-bound search.
    Olson(OlsonArgs),
    /// Exhaustive subset-sum lower-bound sweep over sets avoiding their own
    /// negatives.
    Balandraud(BalandraudArgs),
    /// Zero-sum subsequence checks for plane-vector sequences.
    Theorem4(Theorem4Args),
    /// Scan for a nonzero common zero of the two power-sum polynomials.
    CwSearch(CwSearchArgs),
    /// Report both sides of the plane-vs-line Olson comparison.
    GrtReport(GrtReportArgs),
    /// Signed-sum proof trace over a canonical covering set.
    ProofTrace(ProofTraceArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum GroupArg {
    Fp,
    Fp2,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum RouteArg {
    Auto,
    Full,
    Derivative,
    Targeted,
}

#[derive(Args, Debug)]
pub struct VerifyTheorem1Args {
    /// Odd prime modulus.
    #[arg(long)]
    pub p: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    pub mode: ModeArg,
    /// Sample count for sampled mode.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads; results are identical for any worker count.
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Checkpoint file; written periodically and on completion.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    /// Resume from the checkpoint file instead of starting over.
    #[arg(long, requires = "checkpoint")]
    pub resume: bool,
    /// Report file (JSON, written atomically).
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Lemma5Args {
    #[arg(long)]
    pub p: u32,
    /// auto picks full expansion for p <= 7 and targeted extraction beyond.
    #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
    pub route: RouteArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct IntegralArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Variable-count cap for random polynomials (at most 10).
    #[arg(long, default_value_t = 10)]
    pub max_vars: usize,
    #[arg(long, default_value_t = 6)]
    pub max_degree: u32,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FindZerosumArgs {
    #[arg(long)]
    pub p: u32,
    /// Input file: one element per line (`x,y` for the plane, a single
    /// residue for the line).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = GroupArg::Fp2)]
    pub group: GroupArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SigmaArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = GroupArg::Fp2)]
    pub group: GroupArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OlsonArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long, value_enum, default_value_t = GroupArg::Fp)]
    pub group: GroupArg,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BalandraudArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct Theorem4Args {
    #[arg(long)]
    pub p: u32,
    /// Check one explicit sequence (duplicates allowed) instead of surveying.
    #[arg(long, conflicts_with = "mode")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Sequence length for survey modes; defaults to 2p - 1.
    #[arg(long)]
    pub length: Option<usize>,
    #[arg(long, default_value_t = 10_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct CwSearchArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GrtReportArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ProofTraceArgs {
    #[arg(long)]
    pub p: u32,
    /// Canonical coefficients, comma separated (p + 1 nonzero residues).
    #[arg(long, conflicts_with_all = ["input", "survey"])]
    pub a: Option<String>,
    /// Covering-set file; canonicalized before tracing.
    #[arg(long, conflicts_with = "survey")]
    pub input: Option<PathBuf>,
    /// With --input: also run the subset-sum DP on the full set, not just the
    /// canonical transversal.
    #[arg(long, requires = "input")]
    pub check_full_set: bool,
    /// Trace every canonical tuple (exhaustive) or seeded samples.
    #[arg(long, value_enum)]
    pub survey: Option<ModeArg>,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}
