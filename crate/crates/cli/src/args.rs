use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use metamob::ModelSpec;

/// Environment variable overriding the worker count of `simulate`.
pub const WORKERS_ENV: &str = "METAMOB_WORKERS";

#[derive(Debug, Parser)]
#[command(name = "metamob", version, about = "Treatment-effect trees for IPD meta-analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Grow a tree on a CSV dataset (`y`, `trt`, `trial`, covariates).
    Fit(FitArgs),
    /// Run a simulation grid described by a TOML config.
    Simulate(SimulateArgs),
    /// Merge simulation results and pivot them into figure layouts.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Mob,
    MobRi,
    MetamobRi,
    MetamobSi,
}

impl From<Method> for ModelSpec {
    fn from(m: Method) -> Self {
        match m {
            Method::Mob => ModelSpec::M0,
            Method::MobRi => ModelSpec::M1,
            Method::MetamobRi => ModelSpec::M2,
            Method::MetamobSi => ModelSpec::M3,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct Controls {
    /// Significance level of the splitting test.
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    /// Minimum observations per terminal node.
    #[arg(long, default_value_t = 20)]
    pub minsize: usize,
    /// Log-likelihood change that stops the tree/mixed-model alternation.
    #[arg(long, default_value_t = metamob::glmmtree::DEFAULT_ABSTOL)]
    pub abstol: f64,
    #[arg(long, default_value_t = metamob::glmmtree::DEFAULT_MAX_ITER)]
    pub max_iter: usize,
    #[arg(long)]
    pub max_depth: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    pub data: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::MetamobSi)]
    pub method: Method,
    #[command(flatten)]
    pub controls: Controls,
    /// Output file; standard output if omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `json`: full fit document; `csv`: one row per terminal node.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub config: PathBuf,
    /// Methods to run, overriding the config.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub method: Vec<Method>,
    #[arg(long)]
    pub reps: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads; defaults to all cores.
    #[arg(long, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    #[command(flatten)]
    pub controls: Controls,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// `csv`: one aggregate row per cell and method; `json`: aggregates plus every replication.
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Accept grid values outside the published design.
    #[arg(long)]
    pub allow_custom: bool,
    /// Record wall time per replication (output is then not reproducible).
    #[arg(long)]
    pub with_timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Metric {
    Fdr,
    Accuracy,
    Correlation,
    Subgroups,
    Warnings,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Axis {
    Tau0,
    Tau1,
    TauGamma,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Results written by `simulate` (CSV or JSON, by extension).
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = Metric::Fdr)]
    pub metric: Metric,
    /// Variance shown in facet rows.
    #[arg(long, value_enum, default_value_t = Axis::Tau1)]
    pub rows: Axis,
    /// Variance on the x axis within a facet.
    #[arg(long, value_enum, default_value_t = Axis::Tau0)]
    pub x: Axis,
    /// Directory receiving `table_<metric>.csv`, `series_<metric>.json` and
    /// `merged.csv`; without it the table (or series) goes to standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}
