use clap::{Args, Parser, Subcommand, ValueEnum};
use latpath_core::HorizontalWidth;

pub const DEFAULT_CAP: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(
    name = "latpath",
    version,
    about = "Enumerate lattice paths, run path bijections and verify counting identities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print an exact count.
    Count(CountArgs),
    /// Print every member of a family, one word per line.
    Enumerate(EnumerateArgs),
    /// Apply one of the bijections to a word.
    Biject(BijectArgs),
    /// Check an identity over parameter ranges.
    Verify(VerifyArgs),
    /// Print a table of exact values.
    Table(TableArgs),
}

/// Shape parameters for a single family.
#[derive(Debug, Args, Clone)]
pub struct PathParams {
    /// Rise of the up step.
    #[arg(long)]
    pub k: Option<u32>,
    /// Comma-separated rise set; replaces --k.
    #[arg(long, value_delimiter = ',', conflicts_with = "k")]
    pub rises: Option<Vec<u32>>,
    /// Horizontal step width, or `inf` for no horizontal steps.
    #[arg(long)]
    pub a: Option<HorizontalWidth>,
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    /// Number of peaks.
    #[arg(long)]
    pub j: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CountFamily {
    /// (n,m)-Dyck paths, closed form (coprime n, m).
    Dyck,
    /// (n,m)-Dyck paths with j peaks, closed form.
    DyckPeaks,
    /// Free (n,m)-paths.
    Free,
    /// Free (n,m)-paths with j peaks.
    FreePeaks,
    /// Free (n,m)-paths with j peaks starting with U and ending with D.
    FreeUdPeaks,
    /// Strict paths of order n.
    Strict,
    /// Super paths of order n.
    Super,
    /// Super paths whose first non-horizontal step is up.
    SuperUp,
    /// Super paths containing an up step.
    SuperWithUp,
    /// Total humps over strict paths of order n.
    Humps,
    /// Total peaks over strict paths of order n.
    Peaks,
    /// k-ary paths of order (k+1)n, closed form.
    Kary,
    /// k-ary paths of order (k+1)n with j peaks, closed form.
    KaryPeaks,
    Catalan,
    Narayana,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    pub family: CountFamily,
    #[command(flatten)]
    pub params: PathParams,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EnumerateFamily {
    /// Strict (k,a)- or (S,a)-paths.
    Ka,
    Super,
    SuperUp,
    SuperWithUp,
    Dyck,
    Free,
    FreeUd,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum WordFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub family: EnumerateFamily,
    #[command(flatten)]
    pub params: PathParams,
    #[arg(long, value_enum, default_value_t)]
    pub format: WordFormat,
    /// Largest family size to print (defaults to LATPATH_CAP, then 1000000).
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Map {
    Phi,
    PhiInverse,
    PsiExpand,
    PsiContract,
    Shrink,
    Grow,
    PhiHat,
    PhiHatInverse,
    DyckRep,
    StripUp,
    PrependUp,
    ToKary,
    FromKary,
}

#[derive(Debug, Args)]
pub struct BijectArgs {
    pub map: Map,
    #[command(flatten)]
    pub params: PathParams,
    #[arg(long, allow_hyphen_values = true)]
    pub word: String,
    /// 0-based hump index for phi.
    #[arg(long, default_value_t = 0)]
    pub hump: usize,
    /// 1-based peak index for phi-hat.
    #[arg(long, default_value_t = 1)]
    pub peak: usize,
    /// Also print the anchors and segments as JSON.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Clone, Copy, Default, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

/// Ranges: `lo..hi` (inclusive), comma lists, or single values.
#[derive(Debug, Args, Clone)]
pub struct RangeParams {
    #[arg(long)]
    pub k: Option<String>,
    /// Widths; `inf` allowed.
    #[arg(long)]
    pub a: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub j: Option<String>,
    /// All pairs with 2 <= n + m <= max-sum.
    #[arg(long)]
    pub max_sum: Option<u64>,
    /// Comma-separated rise set.
    #[arg(long, value_delimiter = ',')]
    pub rises: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity to check (eq2 … eq13, lemma2-class, phi-roundtrip, phihat-roundtrip,
    /// psi-partition, shrink-bijection, lemma4-chain, sa-corollary).
    pub identity: String,
    #[command(flatten)]
    pub ranges: RangeParams,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
    /// Report elapsed_ms as 0 so output is byte-reproducible.
    #[arg(long)]
    pub no_timing: bool,
    /// Largest family any instance may enumerate.
    #[arg(long)]
    pub cap: Option<u64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum TableKind {
    RationalNarayana,
    HumpTotals,
    KaryPeaks,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub kind: TableKind,
    #[command(flatten)]
    pub ranges: RangeParams,
    #[arg(long, value_enum, default_value_t)]
    pub format: ReportFormat,
}
