//! Trees with global random effects: alternate growing a MOB tree on the
//! response minus the current random-effect offset, and fitting the mixed
//! model for the resulting subgroups.
//!
//! Under `M3` the offset also carries the trial part of the stratified
//! intercepts, so that trial baselines do not reach the instability tests.

use crate::data::IpdDataset;
use crate::error::{Error, Result};
use crate::lmm::{fit_lmm, LmmProblem};
use crate::mobtree::{grow_tree, TreeControls};
use crate::model::{FitWarning, Intercept, LmmFit, ModelSpec};
use crate::tree::Tree;

pub const DEFAULT_ABSTOL: f64 = 0.001;
pub const DEFAULT_MAX_ITER: usize = 100;

#[derive(Debug, Clone)]
pub struct GlmmTreeFit {
    pub tree: Tree,
    pub lmm: LmmFit,
    pub n_iter: usize,
    pub converged: bool,
    /// ML log-likelihood of the mixed model after each iteration.
    pub loglik_trace: Vec<f64>,
    pub warnings: Vec<FitWarning>,
}

impl GlmmTreeFit {
    pub fn spec(&self) -> ModelSpec {
        self.lmm.spec
    }
}

/// Fits with the default tolerance and iteration cap.
pub fn fit_default(data: &IpdDataset, spec: ModelSpec, controls: &TreeControls) -> Result<GlmmTreeFit> {
    fit(data, spec, controls, DEFAULT_ABSTOL, DEFAULT_MAX_ITER)
}

pub fn fit(data: &IpdDataset, spec: ModelSpec, controls: &TreeControls, abstol: f64, max_iter: usize) -> Result<GlmmTreeFit> {
    if max_iter == 0 {
        return Err(Error::Config("max_iter must be at least 1".into()));
    }
    let zero = vec![0.0; data.n()];
    if spec == ModelSpec::M0 {
        let tree = grow_tree(data, &zero, controls)?;
        let (lmm, warnings) = mixed_model(data, &tree, ModelSpec::M0)?;
        return Ok(GlmmTreeFit { tree, loglik_trace: vec![lmm.loglik], lmm, n_iter: 1, converged: true, warnings });
    }

    let mut offset = zero;
    let mut trace = Vec::new();
    let mut previous: Option<Tree> = None;
    let mut iter = 0;
    loop {
        iter += 1;
        let mut tree = grow_tree(data, &offset, controls)?;
        let (lmm, mut warnings) = match mixed_model(data, &tree, spec) {
            Ok(fitted) => fitted,
            Err(Error::UnidentifiableFixedEffects(detail)) => {
                // Keep the tree and report node-wise least squares instead.
                let (lmm, mut w) = mixed_model(data, &tree, ModelSpec::M0)?;
                w.push(FitWarning::Unidentifiable { detail });
                trace.push(lmm.loglik);
                return Ok(GlmmTreeFit { tree, lmm, n_iter: iter, converged: false, loglik_trace: trace, warnings: w });
            }
            Err(e) => return Err(e),
        };
        let change = trace.last().map(|prev: &f64| (lmm.loglik - prev).abs());
        trace.push(lmm.loglik);
        let same_tree = previous.as_ref().is_some_and(|p| p.same_partition(&tree));
        let converged = same_tree || change.is_some_and(|d| d <= abstol);
        if converged || iter >= max_iter {
            if !converged {
                warnings.push(FitWarning::IterationLimit { iterations: iter });
            }
            tree.set_terminal_effects(lmm.fixed.clone())?;
            return Ok(GlmmTreeFit { tree, lmm, n_iter: iter, converged, loglik_trace: trace, warnings });
        }
        offset = random_offset(data, &tree, &lmm)?;
        previous = Some(tree);
    }
}

/// Mixed-model fit for the subgroups of `tree`, with an optimizer that ran
/// out of evaluations downgraded to a warning on its best iterate.
fn mixed_model(data: &IpdDataset, tree: &Tree, spec: ModelSpec) -> Result<(LmmFit, Vec<FitWarning>)> {
    let assignment = tree.assign(data)?;
    let problem = LmmProblem::new(data, &assignment, spec)?;
    match fit_lmm(&problem) {
        Ok(f) => {
            let w = f.warnings.clone();
            Ok((f, w))
        }
        Err(Error::ConvergenceFailure { evaluations, best }) => {
            let mut f = *best;
            f.warnings.push(FitWarning::EvaluationLimit { evaluations });
            let w = f.warnings.clone();
            Ok((f, w))
        }
        Err(e) => Err(e),
    }
}

/// Per-subject offset for the next tree-growing step.
pub fn random_offset(data: &IpdDataset, tree: &Tree, lmm: &LmmFit) -> Result<Vec<f64>> {
    let assignment = tree.assign(data)?;
    let mut offset: Vec<f64> =
        (0..data.n()).map(|i| lmm.re.offset(data.trial()[i], data.trt()[i])).collect();
    if lmm.spec.stratified_intercepts() {
        let delta = trial_baselines(data, &assignment, lmm);
        for (o, &k) in offset.iter_mut().zip(data.trial()) {
            *o += delta[k - 1];
        }
    }
    Ok(offset)
}

/// Trial part of the stratified intercepts: the subject-weighted additive fit
/// `γ_jk ≈ α_j + δ_k`, with `δ` centered over subjects. Node-specific
/// deviations from additivity stay in the tree's response.
fn trial_baselines(data: &IpdDataset, assignment: &[usize], lmm: &LmmFit) -> Vec<f64> {
    let k = data.n_trials();
    let j = lmm.fixed.len();
    let mut w = vec![vec![0.0; k]; j];
    for (&node, &trial) in assignment.iter().zip(data.trial()) {
        w[node - 1][trial - 1] += 1.0;
    }
    let gamma: Vec<Vec<f64>> = lmm
        .fixed
        .iter()
        .map(|f| match &f.gamma {
            Intercept::PerTrial(g) => g.iter().map(|v| v.unwrap_or(0.0)).collect(),
            Intercept::Common(c) => vec![*c; k],
        })
        .collect();
    let mut alpha = vec![0.0; j];
    let mut delta = vec![0.0; k];
    for _ in 0..200 {
        let mut change: f64 = 0.0;
        for a in 0..j {
            let (num, den) = (0..k).fold((0.0, 0.0), |(n, d), t| (n + w[a][t] * (gamma[a][t] - delta[t]), d + w[a][t]));
            let v = if den > 0.0 { num / den } else { 0.0 };
            change = change.max((v - alpha[a]).abs());
            alpha[a] = v;
        }
        for t in 0..k {
            let (num, den) = (0..j).fold((0.0, 0.0), |(n, d), a| (n + w[a][t] * (gamma[a][t] - alpha[a]), d + w[a][t]));
            let v = if den > 0.0 { num / den } else { 0.0 };
            change = change.max((v - delta[t]).abs());
            delta[t] = v;
        }
        if change < 1e-12 {
            break;
        }
    }
    let total: f64 = (0..k).map(|t| (0..j).map(|a| w[a][t]).sum::<f64>()).sum();
    let mean = (0..k).map(|t| delta[t] * (0..j).map(|a| w[a][t]).sum::<f64>()).sum::<f64>() / total;
    delta.iter().map(|d| d - mean).collect()
}

/// Result of refitting a tree's subgroup model on new data.
#[derive(Debug, Clone)]
pub struct SubjectEffects {
    /// Estimated treatment effect of each subject's subgroup.
    pub effects: Vec<f64>,
    pub assignment: Vec<usize>,
    pub refit: LmmFit,
    pub warnings: Vec<FitWarning>,
}

/// Routes `newdata` through the tree, refits the same model there, and
/// returns every subject's subgroup treatment effect.
pub fn estimate_subject_effects(fit: &GlmmTreeFit, newdata: &IpdDataset) -> Result<Vec<f64>> {
    refit_subject_effects(fit, newdata).map(|s| s.effects)
}

pub fn refit_subject_effects(fit: &GlmmTreeFit, newdata: &IpdDataset) -> Result<SubjectEffects> {
    let assignment = fit.tree.assign(newdata)?;
    let j = fit.tree.n_terminals();
    let mut seen = vec![false; j];
    for &a in &assignment {
        seen[a - 1] = true;
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::SubgroupAbsent { node: missing + 1 });
    }
    let problem = LmmProblem::new(newdata, &assignment, fit.spec())?;
    let (refit, warnings) = match fit_lmm(&problem) {
        Ok(f) => {
            let w = f.warnings.clone();
            (f, w)
        }
        Err(Error::ConvergenceFailure { evaluations, best }) => {
            let mut f = *best;
            f.warnings.push(FitWarning::EvaluationLimit { evaluations });
            let w = f.warnings.clone();
            (f, w)
        }
        Err(e) => return Err(e),
    };
    let effects = assignment.iter().map(|&a| refit.fixed[a - 1].theta).collect();
    Ok(SubjectEffects { effects, assignment, refit, warnings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn data(n: usize, k: usize, tau0: f64, tau1: f64, seed: u64) -> IpdDataset {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b0: Vec<f64> = (0..k).map(|_| tau0 * rng.sample::<f64, _>(StandardNormal)).collect();
        let b1: Vec<f64> = (0..k).map(|_| tau1 * rng.sample::<f64, _>(StandardNormal)).collect();
        let mut y = Vec::new();
        let mut trt = Vec::new();
        let mut trial = Vec::new();
        let mut x1 = Vec::new();
        let mut x2 = Vec::new();
        for i in 0..n {
            let t = u8::from(rng.random::<bool>());
            let tr = i % k;
            let a: f64 = rng.random_range(0.0..10.0);
            let b: f64 = rng.random_range(0.0..10.0);
            let eff = if a <= 5.0 { -3.0 } else { 3.0 };
            y.push(10.0 + b0[tr] + (eff + b1[tr]) * f64::from(t) + rng.sample::<f64, _>(StandardNormal));
            trt.push(t);
            trial.push(tr + 1);
            x1.push(a);
            x2.push(b);
        }
        IpdDataset::new(y, trt, trial, vec![x1, x2], vec!["a".into(), "b".into()]).unwrap()
    }

    #[test]
    fn m0_is_plain_tree() {
        let d = data(400, 5, 3.0, 0.0, 1);
        let c = TreeControls::default();
        let f = fit_default(&d, ModelSpec::M0, &c).unwrap();
        let t = grow_tree(&d, &vec![0.0; d.n()], &c).unwrap();
        assert_eq!(f.tree, t);
        assert_eq!(f.n_iter, 1);
    }

    #[test]
    fn random_effect_models_converge_and_find_the_split() {
        for spec in [ModelSpec::M1, ModelSpec::M2, ModelSpec::M3] {
            let d = data(600, 6, 4.0, 2.0, 2);
            let f = fit_default(&d, spec, &TreeControls::default()).unwrap();
            assert!(f.converged, "{spec}: {:?} {:?} {:?}", f.loglik_trace, f.tree.to_document(), f.warnings);
            assert!(f.n_iter <= 5, "{spec}: {}", f.n_iter);
            assert_eq!(f.tree.n_terminals(), 2, "{spec}");
            assert_eq!(f.loglik_trace.len(), f.n_iter);
            let effects = estimate_subject_effects(&f, &d).unwrap();
            let lo = effects.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = effects.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            assert!((lo + 3.0).abs() < 1.5 && (hi - 3.0).abs() < 1.5, "{spec}: {lo} {hi}");
        }
    }

    #[test]
    fn rerunning_from_a_converged_tree_is_stable() {
        let d = data(500, 5, 3.0, 1.0, 3);
        let c = TreeControls::default();
        let f = fit_default(&d, ModelSpec::M2, &c).unwrap();
        let offset = random_offset(&d, &f.tree, &f.lmm).unwrap();
        let again = grow_tree(&d, &offset, &c).unwrap();
        assert!(again.same_partition(&f.tree));
    }

    #[test]
    fn absent_subgroup_is_reported() {
        let d = data(400, 4, 0.0, 0.0, 4);
        let f = fit_default(&d, ModelSpec::M1, &TreeControls::default()).unwrap();
        assert_eq!(f.tree.n_terminals(), 2);
        // Only subjects routed to the first subgroup.
        let nodes = f.tree.assign(&d).unwrap();
        let keep: Vec<usize> = (0..d.n()).filter(|&i| nodes[i] == 1).collect();
        let sub = IpdDataset::new(
            keep.iter().map(|&i| d.y()[i]).collect(),
            keep.iter().map(|&i| d.trt()[i]).collect(),
            keep.iter().map(|&i| d.trial()[i]).collect(),
            vec![keep.iter().map(|&i| d.column(0)[i]).collect(), keep.iter().map(|&i| d.column(1)[i]).collect()],
            vec!["a".into(), "b".into()],
        )
        .unwrap();
        assert!(matches!(estimate_subject_effects(&f, &sub), Err(Error::SubgroupAbsent { node: 2 })));
    }
}
