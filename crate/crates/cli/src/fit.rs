use std::io::Write;

use anyhow::{Context, Result};
use metamob::glmmtree::{self, GlmmTreeFit};
use metamob::mobtree::TreeControls;
use metamob::{FitWarning, IpdDataset, Intercept, ModelSpec, Tree, VarianceComponents};
use serde::{Deserialize, Serialize};

use crate::args::{Controls, FitArgs, Format};

impl Controls {
    pub fn tree_controls(&self) -> TreeControls {
        TreeControls { alpha: self.alpha, minsize: self.minsize, max_depth: self.max_depth, ..TreeControls::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TerminalSummary {
    pub node: usize,
    pub n: usize,
    /// Intercept, averaged over trials when stratified.
    pub gamma: f64,
    pub theta: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma_by_trial: Option<Vec<Option<f64>>>,
}

/// Everything `fit` reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FitReport {
    pub method: String,
    pub n: usize,
    pub n_trials: usize,
    pub tree: Tree,
    pub terminals: Vec<TerminalSummary>,
    pub variance_components: VarianceComponents,
    pub loglik: f64,
    pub reml_loglik: f64,
    pub n_iter: usize,
    pub converged: bool,
    pub warnings: Vec<FitWarning>,
}

impl FitReport {
    pub fn new(data: &IpdDataset, fit: &GlmmTreeFit) -> Self {
        let terminals = fit
            .tree
            .terminals()
            .into_iter()
            .map(|(node, eff, n)| TerminalSummary {
                node,
                n,
                gamma: eff.gamma.average(),
                theta: eff.theta,
                gamma_by_trial: match &eff.gamma {
                    Intercept::PerTrial(v) => Some(v.clone()),
                    Intercept::Common(_) => None,
                },
            })
            .collect();
        FitReport {
            method: fit.spec().method_name().to_string(),
            n: data.n(),
            n_trials: data.n_trials(),
            tree: fit.tree.clone(),
            terminals,
            variance_components: fit.lmm.vc,
            loglik: fit.lmm.loglik,
            reml_loglik: fit.lmm.reml_loglik,
            n_iter: fit.n_iter,
            converged: fit.converged,
            warnings: fit.warnings.clone(),
        }
    }
}

pub fn fit_dataset(data: &IpdDataset, spec: ModelSpec, controls: &Controls) -> Result<FitReport> {
    let fit = glmmtree::fit(data, spec, &controls.tree_controls(), controls.abstol, controls.max_iter)?;
    for w in &fit.warnings {
        log::warn!("{}: {w:?}", w.kind());
    }
    Ok(FitReport::new(data, &fit))
}

/// One row per terminal node.
pub fn write_terminals_csv(out: &mut dyn Write, report: &FitReport) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["node", "n", "gamma", "theta", "gamma_by_trial"])?;
    for t in &report.terminals {
        let by_trial = t
            .gamma_by_trial
            .as_ref()
            .map(|v| {
                v.iter()
                    .map(|g| g.map(|x| metamob::metrics::round_sig(x).to_string()).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(";")
            })
            .unwrap_or_default();
        w.write_record([
            t.node.to_string(),
            t.n.to_string(),
            metamob::metrics::round_sig(t.gamma).to_string(),
            metamob::metrics::round_sig(t.theta).to_string(),
            by_trial,
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn cmd_fit(args: &FitArgs) -> Result<()> {
    let data = IpdDataset::read_csv_path(&args.data).with_context(|| format!("reading {}", args.data.display()))?;
    let report = fit_dataset(&data, args.method.into(), &args.controls)?;
    log::info!(
        "{}: {} subgroups after {} iterations (converged: {})",
        report.method,
        report.terminals.len(),
        report.n_iter,
        report.converged
    );
    let mut out = crate::open_output(args.out.as_deref())?;
    match args.format {
        Format::Json => crate::write_json(&mut out, &report),
        Format::Csv => write_terminals_csv(&mut out, &report),
    }
}
