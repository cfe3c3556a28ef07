use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hstar-lab",
    version,
    about = "Ehrhart h*-vectors of hypersimplices and hypercube slices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute h*(I^n_{r,k}) by one or all methods
    Hstar(HstarArgs),
    /// Stream decorated ordered set partitions with a given winding number
    Enum(EnumArgs),
    /// Run bounded exhaustive identity and bijection checks
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// alternating sum of restricted coefficients
    Formula,
    /// count r-hypersimplicial decorated ordered set partitions
    Enum,
    /// lattice-point counts of dilates
    Oracle,
    /// all three, checked against each other
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HstarFormat {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum JsonOnly {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct HstarArgs {
    /// Side length of the cube [0, r]^n
    #[arg(long, default_value_t = 1)]
    pub r: i64,
    /// Coordinate sum of the slice
    #[arg(long)]
    pub k: i64,
    /// Ambient dimension
    #[arg(long)]
    pub n: i64,
    #[arg(long, value_enum, default_value_t = Method::All)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = HstarFormat::Json)]
    pub format: HstarFormat,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    /// Number of spots on the circle
    #[arg(long)]
    pub k: i64,
    /// Size of the ground set
    #[arg(long)]
    pub n: i64,
    /// Winding number
    #[arg(long)]
    pub d: i64,
    /// Threshold for r-bad blocks (default 1)
    #[arg(long)]
    pub r: Option<i64>,
    /// Keep only r-hypersimplicial partitions
    #[arg(long)]
    pub hypersimplicial: bool,
    /// Stop after this many records
    #[arg(long)]
    pub limit: Option<u64>,
    #[arg(long, value_enum, default_value_t = JsonOnly::Json)]
    pub format: JsonOnly,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// lemma1, prop1, prop2, prop3, prop4, prop5, eq6, eulerian, lemma2,
    /// lemma3, threeway or all
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<usize>,
    #[arg(long)]
    pub max_k: Option<usize>,
    #[arg(long)]
    pub max_r: Option<usize>,
    /// Largest |T| for the sieve suites
    #[arg(long)]
    pub max_t: Option<usize>,
    /// Seed for the randomized samples beyond the exhaustive box
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = VerifyFormat::Text)]
    pub format: VerifyFormat,
}
