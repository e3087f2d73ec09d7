//! Model specifications and fitted-object types shared by every layer.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Node model used by the tree: plain GLM (`M0`) or one of the three
/// mixed-effects variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ModelSpec {
    /// `γ_j + θ_j t`, no random effects (MOB).
    M0,
    /// Adds a random trial intercept `b0_k` (MOB-RI).
    M1,
    /// Random trial intercept and random treatment slope (metaMOB-RI).
    M2,
    /// Stratified per-node, per-trial intercepts `γ_jk` and a random slope (metaMOB-SI).
    M3,
}

impl ModelSpec {
    pub const ALL: [ModelSpec; 4] = [ModelSpec::M0, ModelSpec::M1, ModelSpec::M2, ModelSpec::M3];

    pub fn has_random_intercept(self) -> bool {
        matches!(self, ModelSpec::M1 | ModelSpec::M2)
    }

    pub fn has_random_slope(self) -> bool {
        matches!(self, ModelSpec::M2 | ModelSpec::M3)
    }

    pub fn stratified_intercepts(self) -> bool {
        self == ModelSpec::M3
    }

    pub fn has_random_effects(self) -> bool {
        self != ModelSpec::M0
    }

    /// Number of variance components besides the residual variance.
    pub fn n_variance_components(self) -> usize {
        self.has_random_intercept() as usize + self.has_random_slope() as usize
    }

    pub fn method_name(self) -> &'static str {
        match self {
            ModelSpec::M0 => "mob",
            ModelSpec::M1 => "mob-ri",
            ModelSpec::M2 => "metamob-ri",
            ModelSpec::M3 => "metamob-si",
        }
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.method_name())
    }
}

impl FromStr for ModelSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "mob" | "m0" => Ok(ModelSpec::M0),
            "mob-ri" | "m1" => Ok(ModelSpec::M1),
            "metamob-ri" | "m2" => Ok(ModelSpec::M2),
            "metamob-si" | "m3" => Ok(ModelSpec::M3),
            other => Err(Error::Config(format!(
                "unknown method `{other}` (expected mob, mob-ri, metamob-ri or metamob-si)"
            ))),
        }
    }
}

/// Between-trial and residual variances. Components the model does not
/// contain are exactly zero.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct VarianceComponents {
    pub tau0_sq: f64,
    pub tau1_sq: f64,
    pub sigma_sq: f64,
}

/// Predicted trial effects; absent components are zero vectors of length K.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RandomEffects {
    pub b0: Vec<f64>,
    pub b1: Vec<f64>,
}

impl RandomEffects {
    pub fn zeros(n_trials: usize) -> Self {
        Self { b0: vec![0.0; n_trials], b1: vec![0.0; n_trials] }
    }

    /// `z_iᵀ b` for a subject in trial `trial` (1-based) with arm `trt`.
    pub fn offset(&self, trial: usize, trt: u8) -> f64 {
        self.b0[trial - 1] + self.b1[trial - 1] * f64::from(trt)
    }
}

/// Node intercept: one value, or one per trial for stratified intercepts.
/// Trials absent from a node have no estimable intercept there.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Intercept {
    Common(f64),
    PerTrial(Vec<Option<f64>>),
}

impl Intercept {
    /// Plain mean of the estimable per-trial intercepts, or the common value.
    pub fn average(&self) -> f64 {
        match self {
            Intercept::Common(g) => *g,
            Intercept::PerTrial(v) => {
                let vals: Vec<f64> = v.iter().flatten().copied().collect();
                if vals.is_empty() {
                    f64::NAN
                } else {
                    vals.iter().sum::<f64>() / vals.len() as f64
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TerminalEffects {
    pub gamma: Intercept,
    pub theta: f64,
}

/// Diagnostics that do not stop a fit but let downstream metrics exclude it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FitWarning {
    /// Optimum found but the profiled-deviance gradient exceeds tolerance.
    LooseGradient { max_abs_grad: f64 },
    /// Variance-component optimizer ran out of evaluations.
    EvaluationLimit { evaluations: usize },
    /// Tree/mixed-model alternation reached `max_iter`.
    IterationLimit { iterations: usize },
    /// Mixed-model step could not identify the fixed effects for a tree.
    Unidentifiable { detail: String },
}

impl FitWarning {
    pub fn kind(&self) -> &'static str {
        match self {
            FitWarning::LooseGradient { .. } => "loose_gradient",
            FitWarning::EvaluationLimit { .. } => "evaluation_limit",
            FitWarning::IterationLimit { .. } => "iteration_limit",
            FitWarning::Unidentifiable { .. } => "unidentifiable",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LmmFit {
    pub spec: ModelSpec,
    /// One block per terminal node, in terminal-id order.
    pub fixed: Vec<TerminalEffects>,
    /// Fixed coefficients aligned with the columns of `X*`; columns dropped
    /// as structurally empty hold 0.
    #[serde(default)]
    pub beta: Vec<f64>,
    pub vc: VarianceComponents,
    pub re: RandomEffects,
    /// Maximum-likelihood log-likelihood at the estimates.
    pub loglik: f64,
    /// Restricted log-likelihood at the estimates (equal to `loglik` for M0).
    pub reml_loglik: f64,
    pub converged: bool,
    pub warnings: Vec<FitWarning>,
}

impl LmmFit {
    pub fn n_terminals(&self) -> usize {
        self.fixed.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_names_are_bijective() {
        for spec in ModelSpec::ALL {
            assert_eq!(spec.method_name().parse::<ModelSpec>().unwrap(), spec);
        }
        assert!("lmtree".parse::<ModelSpec>().is_err());
    }

    #[test]
    fn variance_component_counts() {
        assert_eq!(ModelSpec::M0.n_variance_components(), 0);
        assert_eq!(ModelSpec::M1.n_variance_components(), 1);
        assert_eq!(ModelSpec::M2.n_variance_components(), 2);
        assert_eq!(ModelSpec::M3.n_variance_components(), 1);
        assert!(!ModelSpec::M3.has_random_intercept());
    }

    #[test]
    fn offset_uses_slope_only_for_treated() {
        let re = RandomEffects { b0: vec![1.0, 2.0], b1: vec![0.5, -1.0] };
        assert_eq!(re.offset(2, 0), 2.0);
        assert_eq!(re.offset(2, 1), 1.0);
    }
}
