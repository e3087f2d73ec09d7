use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use metamob::metrics::{run_scenario, write_aggregates_csv, CellReplications, RunOptions, RunReport};
use metamob::simgen::{CorrTarget, Scenario, ScenarioConfig};
use metamob::ModelSpec;
use serde::{Deserialize, Deserializer};

use crate::args::{Format, SimulateArgs};

/// Published grid values; others need `--allow-custom`.
pub const TRIALS: [usize; 2] = [5, 10];
pub const TOTALS: [usize; 4] = [200, 500, 1000, 2000];
pub const TAU0: [f64; 3] = [0.0, 5.0, 10.0];
pub const TAU1: [f64; 4] = [0.0, 2.5, 5.0, 10.0];
pub const TAU_GAMMA: [f64; 3] = [2.5, 5.0, 10.0];

fn one_or_many<'de, D, T>(d: D) -> std::result::Result<Vec<T>, D::Error>
where
    D: Deserializer<'de>,
    T: Deserialize<'de>,
{
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum OneOrMany<T> {
        One(T),
        Many(Vec<T>),
    }
    Ok(match OneOrMany::deserialize(d)? {
        OneOrMany::One(x) => vec![x],
        OneOrMany::Many(v) => v,
    })
}

fn methods<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<ModelSpec>, D::Error> {
    let names: Vec<String> = one_or_many(d)?;
    names.iter().map(|n| n.parse().map_err(serde::de::Error::custom)).collect()
}

fn all_methods() -> Vec<ModelSpec> {
    ModelSpec::ALL.to_vec()
}
fn no_correlation() -> Vec<CorrTarget> {
    vec![CorrTarget::None]
}
fn default_tau_gamma() -> Vec<f64> {
    vec![5.0]
}
fn default_reps() -> usize {
    500
}

/// Simulation grid: every key but `methods`, `reps`, `seed`, `splitter`
/// and `nonsplitter` accepts a single value or an array, and cells are the
/// Cartesian product.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridConfig {
    #[serde(deserialize_with = "one_or_many")]
    pub scenario: Vec<Scenario>,
    #[serde(deserialize_with = "one_or_many")]
    pub n_trials: Vec<usize>,
    #[serde(deserialize_with = "one_or_many")]
    pub n_total: Vec<usize>,
    #[serde(deserialize_with = "one_or_many")]
    pub tau0: Vec<f64>,
    #[serde(deserialize_with = "one_or_many")]
    pub tau1: Vec<f64>,
    #[serde(deserialize_with = "one_or_many", default = "no_correlation")]
    pub corr_target: Vec<CorrTarget>,
    /// Only used by Sim B.
    #[serde(deserialize_with = "one_or_many", default = "default_tau_gamma")]
    pub tau_gamma: Vec<f64>,
    #[serde(deserialize_with = "methods", default = "all_methods")]
    pub methods: Vec<ModelSpec>,
    #[serde(default = "default_reps")]
    pub reps: usize,
    #[serde(default)]
    pub seed: u64,
    pub splitter: Option<usize>,
    pub nonsplitter: Option<usize>,
}

impl GridConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_toml(&text).with_context(|| format!("parsing {}", path.display()))
    }

    /// Rejects values outside the published design.
    pub fn check_domains(&self) -> Result<()> {
        fn check<T: PartialEq + std::fmt::Debug>(name: &str, values: &[T], allowed: &[T]) -> Result<()> {
            match values.iter().find(|v| !allowed.contains(v)) {
                Some(v) => bail!("{name} = {v:?} is outside {allowed:?}; pass --allow-custom to run it anyway"),
                None => Ok(()),
            }
        }
        check("n_trials", &self.n_trials, &TRIALS)?;
        check("n_total", &self.n_total, &TOTALS)?;
        check("tau0", &self.tau0, &TAU0)?;
        check("tau1", &self.tau1, &TAU1)?;
        if self.scenario.contains(&Scenario::SimB) {
            check("tau_gamma", &self.tau_gamma, &TAU_GAMMA)?;
        }
        Ok(())
    }

    /// Expands the grid into cells. Skips combinations that do not exist:
    /// splitter correlations under the null scenario, and a correlation
    /// target whose random effect has zero variance. `tau_gamma` varies
    /// only for Sim B.
    pub fn cells(&self) -> Result<Vec<ScenarioConfig>> {
        if self.methods.is_empty() {
            bail!("no methods selected");
        }
        let mut out = Vec::new();
        for &scenario in &self.scenario {
            let gammas = if scenario == Scenario::SimB { &self.tau_gamma[..] } else { &self.tau_gamma[..1.min(self.tau_gamma.len())] };
            for &k in &self.n_trials {
                for &n in &self.n_total {
                    for &tau0 in &self.tau0 {
                        for &tau1 in &self.tau1 {
                            for &target in &self.corr_target {
                                if scenario == Scenario::Null && target.uses_splitter() {
                                    continue;
                                }
                                let zero = match target {
                                    CorrTarget::None => false,
                                    CorrTarget::B0WithSplitter | CorrTarget::B0WithNonsplitter => tau0 == 0.0,
                                    CorrTarget::B1WithSplitter | CorrTarget::B1WithNonsplitter => tau1 == 0.0,
                                };
                                if zero {
                                    continue;
                                }
                                for &g in gammas {
                                    let mut c = ScenarioConfig::new(scenario, k, n, tau0, tau1)
                                        .with_corr(target)
                                        .with_tau_gamma(g)
                                        .with_seed(self.seed);
                                    if let Some(s) = self.splitter {
                                        c.splitter = s;
                                    }
                                    if let Some(s) = self.nonsplitter {
                                        c.nonsplitter = s;
                                    }
                                    c.validate()?;
                                    out.push(c);
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Runs every cell with every method. Output does not depend on the number
/// of threads in the current rayon pool.
pub fn run_grid(grid: &GridConfig, options: &RunOptions) -> Result<RunReport> {
    let cells = grid.cells()?;
    let total = cells.len() * grid.methods.len();
    let mut report = RunReport { aggregates: Vec::new(), replications: Vec::new() };
    for (i, config) in cells.iter().enumerate() {
        for (j, &method) in grid.methods.iter().enumerate() {
            let start = Instant::now();
            let (agg, scores) = run_scenario(config, method, grid.reps, options)?;
            log::info!(
                "[{}/{total}] {} K={} N={} tau0={} tau1={} {} {}: {} reps in {:.1}s",
                i * grid.methods.len() + j + 1,
                config.scenario,
                config.n_trials,
                config.n_total,
                config.tau0,
                config.tau1,
                config.corr_target,
                method,
                grid.reps,
                start.elapsed().as_secs_f64()
            );
            report.aggregates.push(agg);
            report.replications.push(CellReplications { config: config.clone(), method, scores });
        }
    }
    Ok(report)
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    let mut grid = GridConfig::read(&args.config)?;
    if let Some(r) = args.reps {
        grid.reps = r;
    }
    if let Some(s) = args.seed {
        grid.seed = s;
    }
    if !args.method.is_empty() {
        grid.methods = args.method.iter().map(|&m| m.into()).collect();
    }
    if !args.allow_custom {
        grid.check_domains()?;
    }
    let options = RunOptions {
        controls: args.controls.tree_controls(),
        abstol: args.controls.abstol,
        max_iter: args.controls.max_iter,
        timing: args.with_timing,
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = args.workers {
        if w == 0 {
            bail!("workers must be at least 1");
        }
        pool = pool.num_threads(w);
    }
    let pool = pool.build()?;
    log::info!("{} cells x {} methods, {} reps each, {} workers", grid.cells()?.len(), grid.methods.len(), grid.reps, pool.current_num_threads());
    let report = pool.install(|| run_grid(&grid, &options))?;
    let mut out = crate::open_output(args.out.as_deref())?;
    match args.format {
        Format::Csv => {
            write_aggregates_csv(&mut out, &report.aggregates)?;
            out.flush()?;
            Ok(())
        }
        Format::Json => crate::write_json(&mut out, &report),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_grids_are_valid() {
        let dir = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/configs"));
        for name in ["null-grid", "sim-a-grid", "sim-b-grid", "smoke"] {
            let g = GridConfig::read(&dir.join(format!("{name}.toml"))).unwrap();
            g.check_domains().unwrap();
            assert!(!g.cells().unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn null_grid_skips_degenerate_cells() {
        let dir = Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/configs"));
        let g = GridConfig::read(&dir.join("null-grid.toml")).unwrap();
        let cells = g.cells().unwrap();
        // Per (K, N): 12 uncorrelated, 2 x 4 with b0 correlated, 3 x 3 with b1 correlated.
        assert_eq!(cells.len(), 6 * (12 + 8 + 9));
        assert!(cells.iter().all(|c| !c.corr_target.uses_splitter()));
        assert_eq!(g.methods, ModelSpec::ALL.to_vec());
    }

    #[test]
    fn splitter_targets_are_dropped_for_null_only() {
        let g = GridConfig::from_toml(
            "scenario = [\"null\", \"sim-a\"]\nn_trials = 5\nn_total = 200\ntau0 = 5\ntau1 = 5\ncorr_target = [\"b0_with_splitter\", \"b1_with_nonsplitter\"]\n",
        )
        .unwrap();
        let cells = g.cells().unwrap();
        assert_eq!(cells.len(), 3);
        assert!(cells.iter().filter(|c| c.scenario == Scenario::Null).all(|c| c.corr_target == CorrTarget::B1WithNonsplitter));
    }

    #[test]
    fn tau_gamma_only_varies_sim_b() {
        let g = GridConfig::from_toml(
            "scenario = [\"sim-a\", \"sim-b\"]\nn_trials = 5\nn_total = 200\ntau0 = 0\ntau1 = 0\ntau_gamma = [2.5, 10]\n",
        )
        .unwrap();
        let cells = g.cells().unwrap();
        assert_eq!(cells.iter().filter(|c| c.scenario == Scenario::SimA).count(), 1);
        assert_eq!(cells.iter().filter(|c| c.scenario == Scenario::SimB).count(), 2);
    }
}
