use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "qhe",
    about = "Measurement-fueled coupled-qubit heat engine simulator",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a single engine cycle and print its energetics ledger
    Cycle(CycleArgs),
    /// Write the CSV data behind one of the built-in figure presets
    Figure(FigureArgs),
    /// Run a parameter sweep from a config file, one CSV row per grid point
    Sweep(SweepArgs),
    /// Run seeded randomized verification suites
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Three,
    Four,
    Five,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MeasArg {
    Zz,
    Xx,
    Xy,
    Xz,
    Custom,
}

impl MeasArg {
    pub fn as_str(&self) -> &'static str {
        match self {
            MeasArg::Zz => "zz",
            MeasArg::Xx => "xx",
            MeasArg::Xy => "xy",
            MeasArg::Xz => "xz",
            MeasArg::Custom => "custom",
        }
    }
}

#[derive(Args, Debug)]
pub struct CycleArgs {
    /// Cycle kind
    #[arg(long, value_enum, default_value = "five")]
    pub kind: KindArg,

    /// Measurement directions
    #[arg(long, value_enum)]
    pub meas: MeasArg,

    /// Measurement strength c0 in [0, 1/sqrt(2)]; 0.5 is projective
    #[arg(long, default_value_t = 0.5)]
    pub c0: f64,

    /// Field during the measurement stroke (ignored by --kind three)
    #[arg(long = "B1")]
    pub b1: f64,

    /// Field during thermalization
    #[arg(long = "B2")]
    pub b2: f64,

    /// Exchange coupling (strong-coupling window requires B < 4J)
    #[arg(long = "J")]
    pub j: f64,

    /// Inverse reservoir temperature
    #[arg(long)]
    pub beta: f64,

    /// Polar angle of qubit A's axis, radians (custom measurement)
    #[arg(long = "thetaA")]
    pub theta_a: Option<f64>,

    /// Azimuthal angle of qubit A's axis, radians (custom measurement)
    #[arg(long = "phiA")]
    pub phi_a: Option<f64>,

    /// Polar angle of qubit B's axis, radians (custom measurement)
    #[arg(long = "thetaB")]
    pub theta_b: Option<f64>,

    /// Azimuthal angle of qubit B's axis, radians (custom measurement)
    #[arg(long = "phiB")]
    pub phi_b: Option<f64>,

    /// Append the ledger as a CSV row (header written for a new file)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FigureArgs {
    /// Preset id: fig2..fig8
    pub id: String,

    /// Output CSV path
    #[arg(long, required_unless_present = "dump")]
    pub out: Option<PathBuf>,

    /// Print the preset parameters instead of writing data
    #[arg(long)]
    pub dump: bool,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Sweep configuration file (key = value lines)
    #[arg(long)]
    pub config: PathBuf,

    /// Output CSV path (overrides `out` from the config)
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// RNG seed; runs are reproducible per seed
    #[arg(long)]
    pub seed: u64,

    /// Number of randomized instances per suite
    #[arg(long, default_value_t = 1000)]
    pub n: usize,

    /// Override every suite tolerance (diagnostic; defaults are per-suite)
    #[arg(long)]
    pub tol: Option<f64>,
}
