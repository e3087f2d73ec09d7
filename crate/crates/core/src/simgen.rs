//! Synthetic IPD meta-analysis data: null model, a four-subgroup tree with
//! common intercepts (Sim A) or trial-specific intercepts (Sim B), random
//! trial effects, and optional correlation between a random effect and one
//! covariate.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, Dyn};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::data::IpdDataset;
use crate::error::{Error, Result};

pub const N_COVARIATES: usize = 15;
pub const COVARIATE_SD: f64 = 10.0;
pub const COVARIATE_RHO: f64 = 0.3;
pub const ERROR_SD: f64 = 5.0;
pub const TARGET_CORRELATION: f64 = 0.42;
/// 1-based numbers of the covariates the generating tree splits on.
pub const SPLITTERS: [usize; 3] = [1, 2, 5];
/// Fixed covariate means; the others are drawn per dataset.
const FIXED_MEANS: [(usize, f64); 4] = [(1, 10.0), (2, 30.0), (4, -40.0), (5, 70.0)];

/// `(μ_γ, θ)` of subgroups 1..4.
pub const SUBGROUP_EFFECTS: [(f64, f64); 4] = [(17.5, -5.0), (30.0, 0.0), (30.0, 0.0), (42.5, 5.0)];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    Null,
    SimA,
    SimB,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::Null => "null",
            Scenario::SimA => "sim-a",
            Scenario::SimB => "sim-b",
        }
    }

    pub fn has_subgroups(self) -> bool {
        self != Scenario::Null
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scenario {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "null" => Ok(Scenario::Null),
            "sim-a" | "a" => Ok(Scenario::SimA),
            "sim-b" | "b" => Ok(Scenario::SimB),
            other => Err(Error::Config(format!("unknown scenario `{other}` (expected null, sim-a or sim-b)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CorrTarget {
    #[default]
    None,
    B0WithSplitter,
    B0WithNonsplitter,
    B1WithSplitter,
    B1WithNonsplitter,
}

impl CorrTarget {
    pub const ALL: [CorrTarget; 5] = [
        CorrTarget::None,
        CorrTarget::B0WithSplitter,
        CorrTarget::B0WithNonsplitter,
        CorrTarget::B1WithSplitter,
        CorrTarget::B1WithNonsplitter,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CorrTarget::None => "none",
            CorrTarget::B0WithSplitter => "b0_with_splitter",
            CorrTarget::B0WithNonsplitter => "b0_with_nonsplitter",
            CorrTarget::B1WithSplitter => "b1_with_splitter",
            CorrTarget::B1WithNonsplitter => "b1_with_nonsplitter",
        }
    }

    pub fn uses_splitter(self) -> bool {
        matches!(self, CorrTarget::B0WithSplitter | CorrTarget::B1WithSplitter)
    }
}

impl fmt::Display for CorrTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CorrTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CorrTarget::ALL
            .into_iter()
            .find(|c| c.name() == s.to_ascii_lowercase().replace('-', "_"))
            .ok_or_else(|| Error::Config(format!("unknown correlation target `{s}`")))
    }
}

fn default_tau_gamma() -> f64 {
    5.0
}
fn default_splitter() -> usize {
    2
}
fn default_nonsplitter() -> usize {
    10
}
fn default_rho() -> f64 {
    COVARIATE_RHO
}

/// One cell of the simulation grid plus the seed of one dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub scenario: Scenario,
    /// Number of trials `K`.
    pub n_trials: usize,
    /// Total number of subjects; each trial gets `n_total / n_trials`.
    pub n_total: usize,
    pub tau0: f64,
    pub tau1: f64,
    #[serde(default)]
    pub corr_target: CorrTarget,
    /// SD of the trial-specific intercepts in Sim B.
    #[serde(default = "default_tau_gamma")]
    pub tau_gamma: f64,
    /// 1-based covariate correlated with a random effect for `*_with_splitter`.
    #[serde(default = "default_splitter")]
    pub splitter: usize,
    /// 1-based covariate used for `*_with_nonsplitter`.
    #[serde(default = "default_nonsplitter")]
    pub nonsplitter: usize,
    /// Covariate equicorrelation.
    #[serde(default = "default_rho")]
    pub rho: f64,
    #[serde(default)]
    pub seed: u64,
}

impl ScenarioConfig {
    pub fn new(scenario: Scenario, n_trials: usize, n_total: usize, tau0: f64, tau1: f64) -> Self {
        Self {
            scenario,
            n_trials,
            n_total,
            tau0,
            tau1,
            corr_target: CorrTarget::None,
            tau_gamma: default_tau_gamma(),
            splitter: default_splitter(),
            nonsplitter: default_nonsplitter(),
            rho: COVARIATE_RHO,
            seed: 0,
        }
    }

    pub fn with_corr(mut self, target: CorrTarget) -> Self {
        self.corr_target = target;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_tau_gamma(mut self, tau_gamma: f64) -> Self {
        self.tau_gamma = tau_gamma;
        self
    }

    pub fn per_trial(&self) -> usize {
        self.n_total / self.n_trials.max(1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_trials == 0 {
            return Err(Error::Config("n_trials must be at least 1".into()));
        }
        if self.per_trial() < 2 {
            return Err(Error::Config(format!(
                "n_total = {} gives fewer than 2 subjects per trial for {} trials",
                self.n_total, self.n_trials
            )));
        }
        for (name, v) in [("tau0", self.tau0), ("tau1", self.tau1), ("tau_gamma", self.tau_gamma)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be a finite value >= 0, got {v}")));
            }
        }
        if !(0.0..1.0).contains(&self.rho) {
            return Err(Error::Config(format!("rho must lie in [0, 1), got {}", self.rho)));
        }
        if !SPLITTERS.contains(&self.splitter) {
            return Err(Error::Config(format!("splitter must be one of X1, X2, X5, got X{}", self.splitter)));
        }
        if !(1..=N_COVARIATES).contains(&self.nonsplitter) || SPLITTERS.contains(&self.nonsplitter) {
            return Err(Error::Config(format!("nonsplitter X{} is not a non-splitting covariate", self.nonsplitter)));
        }
        if self.scenario == Scenario::Null && self.corr_target.uses_splitter() {
            return Err(Error::Config(format!(
                "the null scenario has no splitting covariates; corr_target {} is not allowed",
                self.corr_target
            )));
        }
        Ok(())
    }
}

/// Random quantities drawn for one dataset.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneratorDraws {
    pub b0: Vec<f64>,
    pub b1: Vec<f64>,
    /// `gamma[j][k]`: intercept of subgroup `j+1` in trial `k+1` (Sim B only).
    pub gamma: Option<Vec<Vec<f64>>>,
    pub covariate_means: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruthLabels {
    /// Generating subgroup of each subject (all 1 under the null).
    pub true_node: Vec<usize>,
    pub true_theta: Vec<f64>,
    pub draws: GeneratorDraws,
}

pub fn covariate_names() -> Vec<String> {
    (1..=N_COVARIATES).map(|p| format!("X{p}")).collect()
}

/// Equicorrelation matrix of dimension `p`.
pub fn equicorrelation(p: usize, rho: f64) -> DMatrix<f64> {
    DMatrix::from_fn(p, p, |i, j| if i == j { 1.0 } else { rho })
}

/// Draws `n` rows of the 15 covariates (returned column-major) and the means used.
pub fn gen_covariates<R: Rng>(n: usize, rng: &mut R) -> (Vec<Vec<f64>>, Vec<f64>) {
    gen_covariates_with(n, COVARIATE_RHO, rng)
}

pub fn gen_covariates_with<R: Rng>(n: usize, rho: f64, rng: &mut R) -> (Vec<Vec<f64>>, Vec<f64>) {
    let mut means = vec![0.0; N_COVARIATES];
    for (p, m) in means.iter_mut().enumerate() {
        *m = match FIXED_MEANS.iter().find(|(q, _)| *q == p + 1) {
            Some(&(_, v)) => v,
            None => f64::from(rng.random_range(-70i32..=70)),
        };
    }
    let chol = equicorrelation(N_COVARIATES, rho)
        .cholesky()
        .expect("equicorrelation matrix with rho in [0, 1) is positive definite");
    let l: DMatrix<f64> = chol.l();
    let mut cols: Vec<Vec<f64>> = (0..N_COVARIATES).map(|_| Vec::with_capacity(n)).collect();
    let mut z = nalgebra::OVector::<f64, Dyn>::zeros(N_COVARIATES);
    for _ in 0..n {
        for v in z.iter_mut() {
            *v = rng.sample(StandardNormal);
        }
        let x = &l * &z;
        for p in 0..N_COVARIATES {
            cols[p].push(means[p] + COVARIATE_SD * x[p]);
        }
    }
    (cols, means)
}

/// Subgroup of the generating tree for one covariate row (1-based, 15 covariates).
pub fn reference_node(x_row: &[f64]) -> usize {
    let (x1, x2, x5) = (x_row[0], x_row[1], x_row[4]);
    if x2 <= 30.0 {
        if x1 <= 17.0 { 1 } else { 2 }
    } else if x5 <= 63.0 {
        3
    } else {
        4
    }
}

/// Systematic part of the outcome, `γ + θ t`, and the generating subgroup.
pub fn true_f(x_row: &[f64], t: u8, scenario: Scenario, trial: usize, draws: &GeneratorDraws) -> (f64, usize) {
    match scenario {
        Scenario::Null => (0.0, 1),
        Scenario::SimA | Scenario::SimB => {
            let j = reference_node(x_row);
            let (mu, theta) = SUBGROUP_EFFECTS[j - 1];
            let gamma = match (&draws.gamma, scenario) {
                (Some(g), Scenario::SimB) => g[j - 1][trial - 1],
                _ => mu,
            };
            (gamma + theta * f64::from(t), j)
        }
    }
}

/// Generates one dataset and its truth labels from `config.seed`.
pub fn gen_dataset(config: &ScenarioConfig) -> Result<(IpdDataset, TruthLabels)> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let k = config.n_trials;
    let m = config.per_trial();
    let n = k * m;

    let (mut columns, covariate_means) = gen_covariates_with(n, config.rho, &mut rng);
    let normal = |rng: &mut ChaCha8Rng, sd: f64| sd * rng.sample::<f64, _>(StandardNormal);
    let b0: Vec<f64> = (0..k).map(|_| normal(&mut rng, config.tau0)).collect();
    let b1: Vec<f64> = (0..k).map(|_| normal(&mut rng, config.tau1)).collect();
    let gamma_draws: Vec<Vec<f64>> = SUBGROUP_EFFECTS
        .iter()
        .map(|&(mu, _)| (0..k).map(|_| mu + normal(&mut rng, config.tau_gamma)).collect())
        .collect();
    let trt: Vec<u8> = (0..n).map(|_| u8::from(rng.random_bool(0.5))).collect();
    let eps: Vec<f64> = (0..n).map(|_| normal(&mut rng, ERROR_SD)).collect();
    let trial: Vec<usize> = (0..n).map(|i| i / m + 1).collect();

    let target = match config.corr_target {
        CorrTarget::None => None,
        CorrTarget::B0WithSplitter => Some((&b0, config.splitter)),
        CorrTarget::B0WithNonsplitter => Some((&b0, config.nonsplitter)),
        CorrTarget::B1WithSplitter => Some((&b1, config.splitter)),
        CorrTarget::B1WithNonsplitter => Some((&b1, config.nonsplitter)),
    };
    if let Some((b, p)) = target {
        let per_subject: Vec<f64> = trial.iter().map(|&t| b[t - 1]).collect();
        correlate(&mut columns[p - 1], &per_subject, TARGET_CORRELATION);
    }

    let draws = GeneratorDraws {
        b0,
        b1,
        gamma: (config.scenario == Scenario::SimB).then_some(gamma_draws),
        covariate_means,
    };
    let mut y = Vec::with_capacity(n);
    let mut true_node = Vec::with_capacity(n);
    let mut true_theta = Vec::with_capacity(n);
    let mut row = vec![0.0; N_COVARIATES];
    for i in 0..n {
        for (p, c) in columns.iter().enumerate() {
            row[p] = c[i];
        }
        let (f, j) = true_f(&row, trt[i], config.scenario, trial[i], &draws);
        let k_i = trial[i] - 1;
        y.push(f + draws.b0[k_i] + draws.b1[k_i] * f64::from(trt[i]) + eps[i]);
        true_node.push(j);
        true_theta.push(if config.scenario.has_subgroups() { SUBGROUP_EFFECTS[j - 1].1 } else { 0.0 });
    }
    let data = IpdDataset::new(y, trt, trial, columns, covariate_names())?;
    Ok((data, TruthLabels { true_node, true_theta, draws }))
}

/// Adds `c (b - mean b)` to `x` so that the sample correlation of the added
/// part with `b` reaches `r` relative to a covariate of SD `COVARIATE_SD`.
/// The scale uses the realized SD of `b` across subjects, so the target is
/// hit for any number of distinct trial effects. No-op when `b` is constant.
fn correlate(x: &mut [f64], b: &[f64], r: f64) {
    let n = b.len() as f64;
    let mean = b.iter().sum::<f64>() / n;
    let sd = (b.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n).sqrt();
    if !(sd > 0.0) {
        return;
    }
    let c = r * COVARIATE_SD / (sd * (1.0 - r * r).sqrt());
    for (xi, bi) in x.iter_mut().zip(b) {
        *xi += c * (bi - mean);
    }
}

/// Pearson correlation; `None` when either input has zero variance.
pub fn pearson(a: &[f64], b: &[f64]) -> Option<f64> {
    let n = a.len() as f64;
    if a.len() != b.len() || a.len() < 2 {
        return None;
    }
    let ma = a.iter().sum::<f64>() / n;
    let mb = b.iter().sum::<f64>() / n;
    let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
    for (x, y) in a.iter().zip(b) {
        sab += (x - ma) * (y - mb);
        saa += (x - ma) * (x - ma);
        sbb += (y - mb) * (y - mb);
    }
    if !(saa > 0.0 && sbb > 0.0) {
        return None;
    }
    Some((sab / (saa * sbb).sqrt()).clamp(-1.0, 1.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn covariate_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let (cols, means) = gen_covariates(100_000, &mut rng);
        let mean1 = cols[0].iter().sum::<f64>() / 1e5;
        assert!((mean1 - 10.0).abs() < 0.2, "{mean1}");
        let var1 = cols[0].iter().map(|v| (v - mean1).powi(2)).sum::<f64>() / 1e5;
        assert!((var1 - 100.0).abs() < 3.0, "{var1}");
        let r = pearson(&cols[0], &cols[1]).unwrap();
        assert!((r - 0.3).abs() < 0.02, "{r}");
        for (p, m) in means.iter().enumerate() {
            assert!(m.fract() == 0.0 && (-70.0..=70.0).contains(m), "X{} mean {m}", p + 1);
        }
        assert_eq!((means[0], means[1], means[3], means[4]), (10.0, 30.0, -40.0, 70.0));
    }

    #[test]
    fn uncorrelated_hook() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let (cols, _) = gen_covariates_with(50_000, 0.0, &mut rng);
        assert!(pearson(&cols[2], &cols[7]).unwrap().abs() < 0.02);
    }

    #[test]
    fn equicorrelation_eigenvalues_are_positive() {
        let e = equicorrelation(N_COVARIATES, 0.3).symmetric_eigenvalues();
        let (lo, hi) = e.iter().fold((f64::INFINITY, 0.0f64), |(a, b), &v| (a.min(v), b.max(v)));
        assert!((hi - 5.2).abs() < 1e-9 && (lo - 0.7).abs() < 1e-9);
    }

    #[test]
    fn true_f_examples() {
        let draws = GeneratorDraws { b0: vec![0.0], b1: vec![0.0], gamma: None, covariate_means: vec![] };
        let mut row = vec![0.0; 15];
        row[1] = 20.0;
        row[0] = 10.0;
        assert_eq!(true_f(&row, 1, Scenario::SimA, 1, &draws), (12.5, 1));
        assert_eq!(true_f(&row, 1, Scenario::Null, 1, &draws), (0.0, 1));
        row[1] = 31.0;
        row[4] = 80.0;
        assert_eq!(true_f(&row, 0, Scenario::SimA, 1, &draws), (42.5, 4));
    }

    #[test]
    fn null_outcome_variance_and_equal_trials() {
        let (d, truth) = gen_dataset(&ScenarioConfig::new(Scenario::Null, 5, 1000, 0.0, 0.0).with_seed(3)).unwrap();
        let mean = d.y().iter().sum::<f64>() / 1000.0;
        let var = d.y().iter().map(|v| (v - mean).powi(2)).sum::<f64>() / 999.0;
        assert!((var - 25.0).abs() < 2.0, "{var}");
        for k in 1..=5 {
            assert_eq!(d.trial().iter().filter(|&&t| t == k).count(), 200);
        }
        assert!(truth.true_theta.iter().all(|&t| t == 0.0));
    }

    #[test]
    fn correlation_construction_hits_target() {
        for seed in 0..5 {
            let cfg = ScenarioConfig::new(Scenario::SimA, 5, 10_000, 5.0, 0.0)
                .with_corr(CorrTarget::B0WithSplitter)
                .with_seed(seed);
            let (d, truth) = gen_dataset(&cfg).unwrap();
            let b: Vec<f64> = d.trial().iter().map(|&k| truth.draws.b0[k - 1]).collect();
            let r = pearson(&b, d.column(1)).unwrap();
            assert!((r - 0.42).abs() < 0.03, "seed {seed}: {r}");
        }
    }

    #[test]
    fn seeds_are_reproducible() {
        let cfg = ScenarioConfig::new(Scenario::SimB, 10, 500, 5.0, 2.5).with_seed(9);
        let (a, ta) = gen_dataset(&cfg).unwrap();
        let (b, tb) = gen_dataset(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(ta, tb);
        let (c, _) = gen_dataset(&cfg.clone().with_seed(10)).unwrap();
        assert_ne!(a.y(), c.y());
    }

    #[test]
    fn null_rejects_splitter_correlation() {
        let cfg = ScenarioConfig::new(Scenario::Null, 5, 500, 5.0, 0.0).with_corr(CorrTarget::B0WithSplitter);
        assert!(matches!(gen_dataset(&cfg), Err(Error::Config(_))));
    }

    #[test]
    fn truth_matches_reference_tree() {
        let (d, truth) = gen_dataset(&ScenarioConfig::new(Scenario::SimA, 5, 1000, 0.0, 0.0).with_seed(4)).unwrap();
        let tree = crate::tree::reference_tree(covariate_names()).unwrap();
        assert_eq!(tree.assign(&d).unwrap(), truth.true_node);
    }

    #[test]
    fn sim_b_intercepts_center_on_subgroup_means() {
        let cfg = ScenarioConfig::new(Scenario::SimB, 10, 200, 0.0, 0.0).with_tau_gamma(5.0);
        let mut sum = 0.0;
        let reps = 400;
        for s in 0..reps {
            let (_, t) = gen_dataset(&cfg.clone().with_seed(s)).unwrap();
            sum += t.draws.gamma.unwrap()[3].iter().sum::<f64>() / 10.0;
        }
        let mean = sum / reps as f64;
        assert!((mean - 42.5).abs() < 0.3, "{mean}");
    }
}
