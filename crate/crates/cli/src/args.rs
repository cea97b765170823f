use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use projdim_core::projective::{Coords, Sampler};

#[derive(Parser, Debug, Clone)]
#[command(
    name = "projdim",
    version,
    about = "Dimension estimates for projective iterated function systems"
)]
pub struct Cli {
    /// Worker threads; defaults to all cores.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Command {
    /// Pressure at one exponent with heuristic brackets.
    Pressure(PressureArgs),
    /// Affinity dimension as the zero of the pressure.
    Dimension(DimensionArgs),
    /// Affinity dimension of the positivized Rauzy subsystem, with the N ladder.
    Rauzy(RauzyArgs),
    /// Lyapunov exponents and Lyapunov dimension.
    Lyapunov(LyapunovArgs),
    /// Empirical dimension of projected stationary measures.
    Delta(DeltaArgs),
    /// Sample the attractor to CSV and optionally SVG.
    Render(RenderArgs),
    /// Covering upper bound for the Hausdorff s-measure.
    Cover(CoverArgs),
    /// Box-counting dimension of a CSV point cloud.
    Boxdim(BoxdimArgs),
    /// Positivity, Diophantine and Lie-algebra diagnostics.
    Check(CheckArgs),
    /// Write the system file of the positivized Rauzy subsystem.
    Gamma(GammaArgs),
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct PressureArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long)]
    pub s: f64,
    /// Word length; defaults by alphabet size.
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct DimensionArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct RauzyArgs {
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..=1000))]
    #[serde(rename = "N")]
    pub n: u32,
    #[arg(long, default_value_t = 1e-3)]
    pub tol: f64,
    #[arg(long)]
    pub depth: Option<usize>,
    /// Conjugation parameter, as `p/q`.
    #[arg(long, default_value = "1/6")]
    pub epsilon: String,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct LyapunovArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, default_value_t = 100_000)]
    pub steps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct DeltaArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, default_value_t = 32)]
    pub planes: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u32).range(4..=40))]
    pub res: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SamplerArg {
    ChaosGame,
    Cylinder,
}

impl From<SamplerArg> for Sampler {
    fn from(s: SamplerArg) -> Self {
        match s {
            SamplerArg::ChaosGame => Sampler::ChaosGame,
            SamplerArg::Cylinder => Sampler::Cylinder,
        }
    }
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum CoordsArg {
    #[value(alias = "plane")]
    PlaneP,
    #[value(alias = "simplex")]
    SimplexS,
}

impl From<CoordsArg> for Coords {
    fn from(c: CoordsArg) -> Self {
        match c {
            CoordsArg::PlaneP => Coords::PlaneP,
            CoordsArg::SimplexS => Coords::SimplexS,
        }
    }
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct RenderArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long, value_enum, default_value_t = SamplerArg::ChaosGame)]
    pub sampler: SamplerArg,
    #[arg(long, default_value_t = 100_000)]
    pub points: usize,
    #[arg(long, value_enum, default_value_t = CoordsArg::SimplexS)]
    pub coords: CoordsArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// CSV output path.
    #[arg(long)]
    pub out: PathBuf,
    /// Optional SVG scatter plot.
    #[arg(long)]
    pub svg: Option<PathBuf>,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct CoverArgs {
    #[arg(long)]
    pub system: PathBuf,
    #[arg(long)]
    pub s: f64,
    #[arg(long)]
    pub delta: f64,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct BoxdimArgs {
    #[arg(long)]
    pub cloud: PathBuf,
    /// Resolutions as `lo:hi` or a comma list.
    #[arg(long, default_value = "4:10")]
    pub res: String,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct CheckArgs {
    #[arg(long)]
    pub system: PathBuf,
    /// Word length for the distinctness check.
    #[arg(long, default_value_t = 8)]
    pub depth: usize,
}

#[derive(Args, Serialize, Debug, Clone, PartialEq)]
pub struct GammaArgs {
    #[arg(long = "N", value_parser = clap::value_parser!(u32).range(1..=1000))]
    #[serde(rename = "N")]
    pub n: u32,
    #[arg(long, default_value = "1/6")]
    pub epsilon: String,
    #[arg(long)]
    pub out: PathBuf,
}
