//! `dedekind`: compute generalized Dedekind sums and check their reciprocity
//! laws from the command line.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "dedekind",
    version,
    about = "Generalized Dedekind sums and reciprocity checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One Dedekind sum S_f(nu | nu_k).
    Sum(SumArgs),
    /// Reciprocity left side against a chosen right side.
    Recip(RecipArgs),
    /// Integral of prod_j b_{q_j}(nu_j x) over [0, 1].
    Franel(FranelArgs),
    /// Hirzebruch-Jung fan of the boundary cone l for r = 2.
    Hj(HjArgs),
    /// Truncated multiple zeta sum over the orthogonal lattice.
    Zeta(ZetaArgs),
    /// Like recip, but exits with 3 when the residual is out of tolerance.
    Verify(RecipArgs),
    /// Bulk exact checks over ranges of nu.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Args)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Print rationals as floats.
    #[arg(long)]
    numeric: bool,
}

#[derive(Debug, Args)]
struct SumArgs {
    /// Function descriptors, e.g. `b:1,b:1,b:1` or `poly:0,1,1,cos`.
    #[arg(long = "f", allow_hyphen_values = true)]
    f: String,
    /// Comma-separated nu vector.
    #[arg(long)]
    nu: String,
    /// Index of the summation modulus nu_k.
    #[arg(long)]
    k: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Rademacher,
    Shifted,
    R1,
    Integral,
    Fourier,
    PowerBasis,
    BernoulliR2,
    Exp,
    Cos,
    Sin,
}

#[derive(Debug, Args)]
struct RecipArgs {
    /// Right side to compare against.
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long)]
    nu: String,
    /// Function descriptors; defaults depend on the method.
    #[arg(long = "f", allow_hyphen_values = true)]
    f: Option<String>,
    /// Exponent vector for the Bernoulli and power-basis methods.
    #[arg(long)]
    q: Option<String>,
    /// Index for the trigonometric single-sum methods.
    #[arg(long)]
    k: Option<usize>,
    /// Truncation bound for lattice sums.
    #[arg(long = "N")]
    n: Option<u64>,
    /// Relative tolerance for inexact right sides.
    #[arg(long)]
    tol: Option<f64>,
    /// Absolute tolerance used when the left side is 0.
    #[arg(long)]
    abs_tol: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct FranelArgs {
    #[arg(long)]
    q: String,
    #[arg(long)]
    nu: String,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct HjArgs {
    #[arg(long)]
    nu: String,
    #[arg(long)]
    l: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Full,
    Y,
    Z,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairingArg {
    Symmetric,
    None,
}

#[derive(Debug, Args)]
struct ZetaArgs {
    #[arg(long)]
    nu: String,
    #[arg(long)]
    q: String,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, value_enum, default_value_t = VariantArg::Full)]
    variant: VariantArg,
    #[arg(long = "N")]
    n: u64,
    #[arg(long, value_enum, default_value_t = PairingArg::Symmetric)]
    pairing: PairingArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SweepMethod {
    Rademacher,
    Franel,
    R1,
    PowerBasis,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, value_enum)]
    method: SweepMethod,
    /// Largest nu entry.
    #[arg(long)]
    max: u64,
    /// Exponents for r1 (as a list of q) and power-basis (one vector).
    #[arg(long)]
    q: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long)]
    numeric: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok((text, code)) => {
            println!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
