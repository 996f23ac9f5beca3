use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "stacksort", version, about = "Stack-sorting simplices and their lattice points")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for counting, verification and exploration.
    #[arg(long, global = true, value_name = "N")]
    pub jobs: Option<usize>,

    /// Write the result here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub output: Option<PathBuf>,

    /// `key = value` file supplying defaults for `nmax` and `tmax`.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stack-sort a permutation until it reaches the identity.
    Sort {
        perm: String,
        /// Print only the first K iterates.
        #[arg(long, short = 'k')]
        iterations: Option<usize>,
    },
    /// Describe conv(S^π) or a builtin polytope.
    Polytope { spec: String },
    /// Count lattice points of a rational dilate.
    Count(CountArgs),
    /// Ehrhart polynomial, h*-vector, hollowness and Gorenstein index.
    Ehrhart {
        spec: String,
        /// Largest dilate for the finite-range Gorenstein fallback.
        #[arg(long, default_value_t = 8)]
        tmax: u32,
    },
    /// Run every check and print a report.
    Verify(VerifyArgs),
    /// Tabulate conv(S^π) for every π in S_n.
    Explore { n: usize },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// A permutation, `tau:n`, `lecturehall:n`, `cube:n` or `point`.
    pub spec: String,
    /// Dilate as `p/q` or an integer.
    pub lam: String,
    #[arg(long, value_enum, default_value_t = RegionArg::Closed)]
    pub region: RegionArg,
    /// Shift by −τ_n before dilating.
    #[arg(long, value_enum)]
    pub translate: Option<TranslateArg>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub nmax: Option<usize>,
    #[arg(long)]
    pub tmax: Option<u32>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Include wall times in the report.
    #[arg(long)]
    pub timings: bool,
    /// Negative control: perturb the lecture-hall certificate.
    #[arg(long, hide = true)]
    pub corrupt_certificate: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Closed,
    #[value(alias = "relative-interior")]
    Interior,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TranslateArg {
    Tau,
}
