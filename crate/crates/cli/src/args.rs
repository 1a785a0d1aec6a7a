use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "constacyclic",
    version,
    about = "Constacyclic codes over F_p + vF_p (v^2 = v)",
    args_conflicts_with_subcommands = true
)]
pub struct Cli {
    /// Worker threads for exhaustive searches (default: all cores).
    #[arg(long, global = true, env = "CONSTACYCLIC_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Factor x^n - lambda over F_p into monic irreducibles.
    #[command(allow_negative_numbers = true)]
    Factor(FactorArgs),
    /// Build a code from its standard pair or from one generator and report it.
    #[command(allow_negative_numbers = true)]
    Code(CodeArgs),
    /// Run brute-force audits of the structure theorems.
    #[command(allow_negative_numbers = true)]
    Verify(VerifyArgs),
    /// List every theta-constacyclic code of length n.
    #[command(allow_negative_numbers = true)]
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
pub struct FactorArgs {
    /// Field characteristic (prime).
    #[arg(short)]
    pub p: u64,
    /// Exponent n in x^n - lambda.
    #[arg(short)]
    pub n: usize,
    /// Constant lambda (any integer, reduced mod p).
    #[arg(long, default_value_t = 1)]
    pub lambda: i64,
    #[arg(long)]
    pub json: bool,
}

/// `theta = lambda + v*mu`, either as two integers or as one expression.
#[derive(Debug, Args, Clone)]
pub struct ThetaArgs {
    /// Unit of R such as `1-2v`, `-1+2v` or `2+v`.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["lambda", "mu"])]
    pub theta: Option<String>,
    /// lambda in theta = lambda + v*mu.
    #[arg(long)]
    pub lambda: Option<i64>,
    /// mu in theta = lambda + v*mu (default 0).
    #[arg(long, requires = "lambda")]
    pub mu: Option<i64>,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    #[arg(short)]
    pub p: u64,
    #[arg(short)]
    pub n: usize,
    #[command(flatten)]
    pub theta: ThetaArgs,
    /// g_(1-v), a monic divisor of x^n - (lambda+mu).
    #[arg(
        long,
        allow_hyphen_values = true,
        requires = "g2",
        conflicts_with = "from_generator"
    )]
    pub g1: Option<String>,
    /// g_v, a monic divisor of x^n - lambda.
    #[arg(long, allow_hyphen_values = true, requires = "g1")]
    pub g2: Option<String>,
    /// Any generator over R, e.g. `x^4+(1-2v)x^3+vx^2-x+1`; standardized first.
    #[arg(long, allow_hyphen_values = true)]
    pub from_generator: Option<String>,
    /// Also report the Gray image.
    #[arg(long)]
    pub gray: bool,
    /// Compute the minimum weight of the Gray image (implies --gray).
    #[arg(long)]
    pub min_weight: bool,
    /// Largest number of codewords to scan.
    #[arg(long, default_value_t = constacyclic::DEFAULT_CAP)]
    pub cap: u128,
    /// Write every codeword (additive coordinates a_0..a_{n-1}, b_0..b_{n-1}) to this CSV file.
    #[arg(long)]
    pub codewords_csv: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Units,
    Decompose,
    Principal,
    Unique,
    Frobenius,
    Gray,
    Dual,
    Example,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: SuiteArg,
    #[arg(short, default_value_t = 3)]
    pub p: u64,
    #[arg(short, default_value_t = 2)]
    pub n: usize,
    /// Audit only this theta (default: every unit).
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[arg(long)]
    pub json: bool,
    /// Write the JSON report here as well.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(short)]
    pub p: u64,
    #[arg(short)]
    pub n: usize,
    #[command(flatten)]
    pub theta: ThetaArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Shorthand for --format json.
    #[arg(long)]
    pub json: bool,
    /// Add the Gray-image minimum weight of each code.
    #[arg(long)]
    pub min_weight: bool,
    /// Per-code scan budget for --min-weight.
    #[arg(long, default_value_t = 531_441)]
    pub cap: u128,
}
