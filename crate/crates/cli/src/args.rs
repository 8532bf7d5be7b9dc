use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "lemni",
    version,
    about = "Radii of starlikeness for the lemniscate of Bernoulli and the half-plane Re w < β"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form radius for one class/target pair.
    Radius(RadiusArgs),
    /// Check closed forms against the numerical oracle over a parameter grid.
    Verify(VerifyArgs),
    /// Boundary points of the lemniscate loop and, optionally, of a disk.
    Region(RegionArgs),
    /// Radius as one parameter varies over a range.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    /// f(z)/z has positive real part
    S,
    /// close-to-starlike of type alpha
    Cs,
    /// Janowski starlike ST[A,B]
    St,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetKind {
    /// lemniscate |w^2 - 1| < 1
    Sl,
    /// half-plane Re w < beta
    M,
}

/// Class and target flags shared by `radius` and `sweep`.
#[derive(Debug, Clone, Args)]
pub struct ClassFlags {
    #[arg(long, value_enum)]
    pub class: ClassKind,
    /// Required unless it is the swept parameter.
    #[arg(long)]
    pub n: Option<u32>,
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long = "A", allow_negative_numbers = true)]
    pub a: Option<f64>,
    #[arg(long = "B", allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long, value_enum)]
    pub target: TargetKind,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
}

#[derive(Debug, Args)]
pub struct RadiusArgs {
    #[command(flatten)]
    pub class: ClassFlags,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassFilter {
    S,
    Cs,
    St,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetFilter {
    Sl,
    M,
    All,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub class: ClassFilter,
    #[arg(long, value_enum, default_value = "all")]
    pub target: TargetFilter,
    /// Comma-separated list; defaults to 1,2,3.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u32>,
    /// Comma-separated list; defaults to 0,0.25,0.5.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub alpha: Vec<f64>,
    /// Comma-separated list; defaults to 1.5,2,3.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    pub beta: Vec<f64>,
    /// Comma-separated A values, paired index-wise with --B.
    #[arg(long = "A", value_delimiter = ',', allow_negative_numbers = true)]
    pub a: Vec<f64>,
    /// Comma-separated B values, paired index-wise with --A.
    #[arg(long = "B", value_delimiter = ',', allow_negative_numbers = true)]
    pub b: Vec<f64>,
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct RegionArgs {
    /// Disk center on the real axis.
    #[arg(long, requires = "r", allow_negative_numbers = true)]
    pub a: Option<f64>,
    /// Disk radius.
    #[arg(long, requires = "a", allow_negative_numbers = true)]
    pub r: Option<f64>,
    #[arg(long, default_value_t = 256)]
    pub points: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepParam {
    N,
    Alpha,
    Beta,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
}

impl SweepParam {
    pub fn name(self) -> &'static str {
        match self {
            SweepParam::N => "n",
            SweepParam::Alpha => "alpha",
            SweepParam::Beta => "beta",
            SweepParam::A => "A",
            SweepParam::B => "B",
        }
    }
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub vary: SweepParam,
    #[arg(long, allow_negative_numbers = true)]
    pub from: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub to: f64,
    /// Number of grid points, endpoints included.
    #[arg(long)]
    pub steps: usize,
    #[command(flatten)]
    pub class: ClassFlags,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
}
