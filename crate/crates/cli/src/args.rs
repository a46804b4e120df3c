use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Spectral monomorphy of Hermitian l2-structures, in exact arithmetic.
///
/// Exit status: 0 success or true verdict, 1 checked property false,
/// 2 input or format error, 3 outside a classifier's theorem range.
/// Set SPECTRAMONO_EPS to override the approximate-mode tolerance.
#[derive(Debug, Parser)]
#[command(name = "spectramono", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide k-spectral monomorphy by enumerating all k-subsets.
    Check(CheckArgs),
    /// Classify with the characterization theorem for k and n.
    Classify(ClassifyArgs),
    /// Build a structure document.
    #[command(subcommand)]
    Construct(Construct),
    /// Check a sign matrix against a conference or Hadamard identity.
    Validate(ValidateArgs),
    /// Compare deletion spectra of iS with their closed forms.
    Spectra(SpectraArgs),
    /// Convert between doubly regular tournaments and skew Hadamard matrices.
    Convert(ConvertArgs),
    /// Count 3-cycles and other triples through a pair of vertices.
    C3(C3Args),
}

#[derive(Debug, Args)]
pub struct InputArg {
    /// Structure document, or `-` for standard input. Tournaments are read
    /// as their i-representation and sign matrices S as iS.
    #[arg(long, short)]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, short, required_unless_present = "all_k", conflicts_with = "all_k")]
    pub k: Option<usize>,
    /// Report every k from 1 to n.
    #[arg(long)]
    pub all_k: bool,
    /// Accepted for symmetry with `classify`; `check` always enumerates.
    #[arg(long)]
    pub force_brute: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, short)]
    pub k: usize,
    /// Fall back to enumeration when no classifier covers (n, k).
    #[arg(long)]
    pub force_brute: bool,
}

#[derive(Debug, Subcommand)]
pub enum Construct {
    /// The quadratic residue tournament on Z_q, q prime and 3 mod 4.
    Paley(PaleyArgs),
}

#[derive(Debug, Args)]
pub struct PaleyArgs {
    #[arg(long, short)]
    pub q: u64,
    /// Add a vertex dominating all others.
    #[arg(long)]
    pub hat: bool,
    /// Emit the c-representation: `i`, or `RE,IM` with rational parts
    /// (exact) or decimal parts (approximate).
    #[arg(long, conflicts_with = "skew_adjacency")]
    pub rep: Option<String>,
    /// Emit the skew adjacency sign matrix instead of the tournament.
    #[arg(long)]
    pub skew_adjacency: bool,
    #[command(flatten)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct OutputArg {
    /// Write the document here instead of standard output.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum KindArg {
    Conference,
    SkewConference,
    Hadamard,
    SkewHadamard,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, value_enum)]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct SpectraArgs {
    #[command(flatten)]
    pub input: InputArg,
    #[arg(long, default_value_t = 3)]
    pub max_deletions: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Direction {
    DrtToHadamard,
    HadamardToDrt,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(value_enum)]
    pub direction: Direction,
    #[command(flatten)]
    pub input: InputArg,
    #[command(flatten)]
    pub output: OutputArg,
}

#[derive(Debug, Args)]
pub struct C3Args {
    #[command(flatten)]
    pub input: InputArg,
    /// Two distinct vertices, `X,Y`.
    #[arg(long, value_parser = parse_pair)]
    pub pair: (usize, usize),
    /// Count from determinants of the i-representation; the structure must
    /// have a dominating vertex outside the pair.
    #[arg(long)]
    pub via_determinants: bool,
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (x, y) = s.split_once(',').ok_or("expected X,Y")?;
    let parse = |v: &str| v.trim().parse::<usize>().map_err(|e| format!("{v:?}: {e}"));
    Ok((parse(x)?, parse(y)?))
}
