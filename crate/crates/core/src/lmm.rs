//! Gaussian linear mixed models with independent random intercept and slope
//! per trial, fitted by profiled REML.
//!
//! For relative standard deviations `θ_m = τ_m / σ` the fixed effects, the
//! spherical random effects and `σ²` have closed forms, obtained from one
//! Cholesky factorization of the penalized normal equations
//!
//! ```text
//! [ ΛZ'ZΛ + I   ΛZ'X ] [u]   [ΛZ'y]
//! [ X'ZΛ        X'X  ] [β] = [X'y ]
//! ```
//!
//! with `Λ = diag(θ)` and `b = Λu`. The remaining one or two dimensional
//! criterion is minimized by bracketing on a grid and refining with golden
//! section (one component) or Nelder–Mead (two components).

use nalgebra::{DMatrix, DVector};

use crate::data::IpdDataset;
use crate::design::{design_vectors, Design, RandomTerm};
use crate::error::{Error, Result};
use crate::model::{
    FitWarning, Intercept, LmmFit, ModelSpec, RandomEffects, TerminalEffects, VarianceComponents,
};
use crate::optim::{minimize_1d, nelder_mead, Tracked};

/// A mixed-model fitting problem: response plus designs for a fixed node assignment.
#[derive(Debug, Clone)]
pub struct LmmProblem {
    pub response: Vec<f64>,
    pub design: Design,
    /// 1-based trial ids.
    pub trial: Vec<usize>,
}

impl LmmProblem {
    pub fn new(data: &IpdDataset, assignment: &[usize], spec: ModelSpec) -> Result<Self> {
        let design = design_vectors(data, assignment, spec)?;
        Ok(Self { response: data.y().to_vec(), design, trial: data.trial().to_vec() })
    }

    pub fn from_design(response: Vec<f64>, design: Design, trial: Vec<usize>) -> Result<Self> {
        let n = design.x.nrows();
        if response.len() != n {
            return Err(Error::DimensionMismatch { what: "response", expected: n, got: response.len() });
        }
        if trial.len() != n {
            return Err(Error::DimensionMismatch { what: "trial ids", expected: n, got: trial.len() });
        }
        Ok(Self { response, design, trial })
    }

    pub fn spec(&self) -> ModelSpec {
        self.design.spec
    }

    pub fn n(&self) -> usize {
        self.response.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    Reml,
    Ml,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LmmOptions {
    pub criterion: Criterion,
    pub max_evaluations: usize,
    /// Bracket width at which the search on `θ` stops.
    pub tolerance: f64,
    /// Scaled-gradient threshold for the loose-gradient warning.
    pub gradient_tolerance: f64,
}

impl Default for LmmOptions {
    fn default() -> Self {
        Self { criterion: Criterion::Reml, max_evaluations: 10_000, tolerance: 1e-8, gradient_tolerance: 2e-3 }
    }
}

const THETA_GRID_1D: [f64; 19] =
    [0.0, 1e-3, 3e-3, 0.01, 0.03, 0.1, 0.2, 0.35, 0.5, 0.7, 1.0, 1.5, 2.5, 4.0, 7.0, 12.0, 25.0, 100.0, 1000.0];
const THETA_GRID_2D: [f64; 13] = [0.0, 0.01, 0.05, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0, 1.5, 2.5, 5.0, 20.0];

/// Fits by REML with default options.
pub fn fit_lmm(problem: &LmmProblem) -> Result<LmmFit> {
    fit_lmm_with(problem, &LmmOptions::default())
}

pub fn fit_lmm_with(problem: &LmmProblem, options: &LmmOptions) -> Result<LmmFit> {
    let system = System::new(problem)?;
    let k = system.n_components;
    let mut warnings = Vec::new();

    let theta: Vec<f64> = match k {
        0 => Vec::new(),
        1 => {
            let m = minimize_1d(
                |t| system.criterion(&[t], options.criterion),
                &THETA_GRID_1D,
                options.tolerance,
                options.max_evaluations,
            );
            if m.exhausted {
                let best = system.finish(&m.x, options.criterion, vec![], false)?;
                return Err(Error::ConvergenceFailure { evaluations: m.evaluations, best: Box::new(best) });
            }
            m.x
        }
        _ => {
            let (x, evaluations, ok) = system.minimize_2d(options);
            if !ok {
                let best = system.finish(&x, options.criterion, vec![], false)?;
                return Err(Error::ConvergenceFailure { evaluations, best: Box::new(best) });
            }
            x
        }
    };

    if let Some(g) = system.loose_gradient(&theta, options) {
        warnings.push(FitWarning::LooseGradient { max_abs_grad: g });
    }
    system.finish(&theta, options.criterion, warnings, true)
}

/// Posterior modes of the random effects given variance components and fixed
/// coefficients aligned with the columns of `X*`.
pub fn blups(problem: &LmmProblem, vc: &VarianceComponents, fixed: &[f64]) -> Result<RandomEffects> {
    let d = &problem.design;
    if fixed.len() != d.x.ncols() {
        return Err(Error::DimensionMismatch { what: "fixed coefficients", expected: d.x.ncols(), got: fixed.len() });
    }
    let k = d.n_trials;
    let mut re = RandomEffects::zeros(k);
    let tau_of = |t: RandomTerm| match t {
        RandomTerm::Intercept => vc.tau0_sq,
        RandomTerm::Slope => vc.tau1_sq,
    };
    let active: Vec<usize> = (0..d.z.ncols()).filter(|&c| tau_of(d.z_terms[c]) > 0.0).collect();
    if active.is_empty() || !(vc.sigma_sq > 0.0) {
        return Ok(re);
    }
    let beta = DVector::from_column_slice(fixed);
    let resid = DVector::from_column_slice(&problem.response) - &d.x * beta;
    let zs = d.z.select_columns(&active);
    let mut lhs = zs.tr_mul(&zs);
    for (a, &c) in active.iter().enumerate() {
        lhs[(a, a)] += vc.sigma_sq / tau_of(d.z_terms[c]);
    }
    let rhs = zs.tr_mul(&resid);
    let b = lhs
        .cholesky()
        .map(|ch| ch.solve(&rhs))
        .ok_or_else(|| Error::InvalidData("mixed-model equations are not positive definite".into()))?;
    let mut b_full = vec![0.0; d.z.ncols()];
    for (a, &c) in active.iter().enumerate() {
        b_full[c] = b[a];
    }
    scatter_random_effects(d, &b_full, &mut re);
    Ok(re)
}

fn scatter_random_effects(d: &Design, b: &[f64], re: &mut RandomEffects) {
    let (mut i0, mut i1) = (0, 0);
    for (c, term) in d.z_terms.iter().enumerate() {
        match term {
            RandomTerm::Intercept => {
                re.b0[i0] = b[c];
                i0 += 1;
            }
            RandomTerm::Slope => {
                re.b1[i1] = b[c];
                i1 += 1;
            }
        }
    }
}

/// Cross-products and bookkeeping shared by all criterion evaluations.
struct System<'a> {
    problem: &'a LmmProblem,
    /// Original indices of the fixed columns kept.
    kept: Vec<usize>,
    /// Variance component index of every random column.
    component: Vec<usize>,
    component_terms: Vec<RandomTerm>,
    n_components: usize,
    xtx: DMatrix<f64>,
    ztz: DMatrix<f64>,
    ztx: DMatrix<f64>,
    xty: DVector<f64>,
    zty: DVector<f64>,
    yty: f64,
}

struct Evaluation {
    reml_dev: f64,
    ml_dev: f64,
    pwrss: f64,
    solution: DVector<f64>,
}

impl<'a> System<'a> {
    fn new(problem: &'a LmmProblem) -> Result<Self> {
        let d = &problem.design;
        let n = problem.n();
        let mut kept = Vec::with_capacity(d.x.ncols());
        for c in 0..d.x.ncols() {
            let empty = d.x.column(c).iter().all(|&v| v == 0.0);
            if !empty {
                kept.push(c);
            } else if !(d.spec.stratified_intercepts() && d.n_terminals > 0 && c < d.n_intercept_columns()) {
                return Err(Error::UnidentifiableFixedEffects(format!("fixed column {c} has no observations")));
            }
        }
        let q = kept.len();
        if n <= q {
            return Err(Error::UnidentifiableFixedEffects(format!(
                "{n} observations for {q} fixed effects leaves no residual degrees of freedom"
            )));
        }
        let x = d.x.select_columns(&kept);
        let y = DVector::from_column_slice(&problem.response);
        let xtx = x.tr_mul(&x);
        check_full_rank(&xtx)?;

        let mut component_terms = Vec::new();
        for t in &d.z_terms {
            if !component_terms.contains(t) {
                component_terms.push(*t);
            }
        }
        let component = d.z_terms.iter().map(|t| component_terms.iter().position(|u| u == t).unwrap()).collect();

        Ok(Self {
            problem,
            kept,
            component,
            n_components: component_terms.len(),
            component_terms,
            ztz: d.z.tr_mul(&d.z),
            ztx: d.z.tr_mul(&x),
            xty: x.tr_mul(&y),
            zty: d.z.tr_mul(&y),
            yty: y.dot(&y),
            xtx,
        })
    }

    fn evaluate(&self, theta: &[f64]) -> Option<Evaluation> {
        let r = self.ztz.nrows();
        let q = self.xtx.nrows();
        let lam: Vec<f64> = self.component.iter().map(|&m| theta[m]).collect();
        let mut a = DMatrix::zeros(r + q, r + q);
        for i in 0..r {
            for j in 0..=i {
                let v = lam[i] * self.ztz[(i, j)] * lam[j];
                a[(i, j)] = v;
                a[(j, i)] = v;
            }
            a[(i, i)] += 1.0;
            for j in 0..q {
                let v = lam[i] * self.ztx[(i, j)];
                a[(i, r + j)] = v;
                a[(r + j, i)] = v;
            }
        }
        a.view_mut((r, r), (q, q)).copy_from(&self.xtx);
        let mut rhs = DVector::zeros(r + q);
        for i in 0..r {
            rhs[i] = lam[i] * self.zty[i];
        }
        rhs.rows_mut(r, q).copy_from(&self.xty);

        let chol = a.cholesky()?;
        let l = chol.l_dirty();
        let mut logdet_re = 0.0;
        let mut logdet_all = 0.0;
        for i in 0..r + q {
            let v = 2.0 * l[(i, i)].ln();
            logdet_all += v;
            if i < r {
                logdet_re += v;
            }
        }
        let solution = chol.solve(&rhs);
        let pwrss = (self.yty - rhs.dot(&solution)).max(self.yty * 1e-300).max(f64::MIN_POSITIVE);
        let n = self.problem.n() as f64;
        let dfr = n - q as f64;
        let two_pi = 2.0 * std::f64::consts::PI;
        Some(Evaluation {
            reml_dev: logdet_all + dfr * (1.0 + (two_pi * pwrss / dfr).ln()),
            ml_dev: logdet_re + n * (1.0 + (two_pi * pwrss / n).ln()),
            pwrss,
            solution,
        })
    }

    fn criterion(&self, theta: &[f64], criterion: Criterion) -> f64 {
        match self.evaluate(theta) {
            Some(e) => match criterion {
                Criterion::Reml => e.reml_dev,
                Criterion::Ml => e.ml_dev,
            },
            None => f64::INFINITY,
        }
    }

    /// Two components: grid, Nelder–Mead with one restart, then the two
    /// boundary faces searched in one dimension. Returns (θ, evaluations, ok).
    fn minimize_2d(&self, options: &LmmOptions) -> (Vec<f64>, usize, bool) {
        let crit = options.criterion;
        let mut tracked = Tracked::new(|p: &[f64]| self.criterion(p, crit));
        let mut start = (0, 0);
        let mut best = f64::INFINITY;
        for (i, &a) in THETA_GRID_2D.iter().enumerate() {
            for (j, &b) in THETA_GRID_2D.iter().enumerate() {
                let v = tracked.eval(&[a, b]);
                if v < best {
                    best = v;
                    start = (i, j);
                }
            }
        }
        let step_at = |i: usize| {
            let g = &THETA_GRID_2D;
            let next = if i + 1 < g.len() { g[i + 1] } else { 2.0 * g[i] };
            ((next - g[i]) / 2.0).max(0.005)
        };
        let x0 = [THETA_GRID_2D[start.0], THETA_GRID_2D[start.1]];
        let step = [step_at(start.0), step_at(start.1)];
        let max = options.max_evaluations;
        let mut ok = nelder_mead(&mut tracked, &x0, &step, options.tolerance, max);
        if ok {
            let x1 = tracked.best.clone().unwrap().0;
            let step = [x1[0].max(0.01) * 0.05, x1[1].max(0.01) * 0.05];
            ok = nelder_mead(&mut tracked, &x1, &step, options.tolerance, max);
        }
        let mut evaluations = tracked.evaluations;
        let (mut x, mut value) = tracked.best.take().unwrap();
        if ok {
            for face in 0..2 {
                let m = minimize_1d(
                    |t| {
                        let mut p = [0.0, 0.0];
                        p[1 - face] = t;
                        self.criterion(&p, crit)
                    },
                    &THETA_GRID_1D,
                    options.tolerance,
                    max,
                );
                evaluations += m.evaluations;
                if m.value < value {
                    value = m.value;
                    x = vec![0.0, 0.0];
                    x[1 - face] = m.x[0];
                }
            }
        }
        (x, evaluations, ok)
    }

    /// Largest offending scaled gradient component, if any exceeds the tolerance.
    fn loose_gradient(&self, theta: &[f64], options: &LmmOptions) -> Option<f64> {
        let f = |p: &[f64]| self.criterion(p, options.criterion);
        let f0 = f(theta);
        let mut worst: f64 = 0.0;
        for m in 0..theta.len() {
            let h = 1e-4 * theta[m].max(1.0);
            let mut up = theta.to_vec();
            up[m] += h;
            let fu = f(&up);
            let g = if theta[m] < h {
                // On the boundary only an inward descent direction is a problem.
                let g = (fu - f0) / h;
                if g >= 0.0 { 0.0 } else { g.abs() }
            } else {
                let mut dn = theta.to_vec();
                dn[m] -= h;
                let fd = f(&dn);
                let g = (fu - fd) / (2.0 * h);
                let curv = (fu - 2.0 * f0 + fd) / (h * h);
                let scaled = if curv > 0.0 { g.abs() / curv.sqrt() } else { g.abs() };
                g.abs().min(scaled)
            };
            if g.is_finite() {
                worst = worst.max(g);
            } else {
                worst = f64::INFINITY;
            }
        }
        (worst > options.gradient_tolerance).then_some(worst)
    }

    fn finish(&self, theta: &[f64], criterion: Criterion, warnings: Vec<FitWarning>, converged: bool) -> Result<LmmFit> {
        let e = self
            .evaluate(theta)
            .ok_or_else(|| Error::InvalidData("penalized normal equations are not positive definite".into()))?;
        let d = &self.problem.design;
        let r = self.ztz.nrows();
        let q = self.kept.len();
        let n = self.problem.n() as f64;
        let sigma_sq = match criterion {
            Criterion::Reml => e.pwrss / (n - q as f64),
            Criterion::Ml => e.pwrss / n,
        };
        let mut vc = VarianceComponents { tau0_sq: 0.0, tau1_sq: 0.0, sigma_sq };
        for (m, t) in self.component_terms.iter().enumerate() {
            let tau_sq = theta[m] * theta[m] * sigma_sq;
            match t {
                RandomTerm::Intercept => vc.tau0_sq = tau_sq,
                RandomTerm::Slope => vc.tau1_sq = tau_sq,
            }
        }
        let mut beta = vec![0.0; d.x.ncols()];
        for (i, &c) in self.kept.iter().enumerate() {
            beta[c] = e.solution[r + i];
        }
        let b: Vec<f64> = (0..r).map(|i| theta[self.component[i]] * e.solution[i]).collect();
        let mut re = RandomEffects::zeros(d.n_trials);
        scatter_random_effects(d, &b, &mut re);

        Ok(LmmFit {
            spec: d.spec,
            fixed: self.terminal_effects(&beta),
            beta,
            vc,
            re,
            loglik: -0.5 * e.ml_dev,
            reml_loglik: -0.5 * e.reml_dev,
            converged,
            warnings,
        })
    }

    fn terminal_effects(&self, beta: &[f64]) -> Vec<TerminalEffects> {
        let d = &self.problem.design;
        let kept = |c: usize| self.kept.binary_search(&c).is_ok();
        (1..=d.n_terminals)
            .map(|j| {
                let gamma = if d.spec.stratified_intercepts() {
                    Intercept::PerTrial(
                        (1..=d.n_trials)
                            .map(|k| {
                                let c = d.intercept_column(j, k);
                                kept(c).then(|| beta[c])
                            })
                            .collect(),
                    )
                } else {
                    Intercept::Common(beta[d.intercept_column(j, 1)])
                };
                TerminalEffects { gamma, theta: beta[d.treatment_column(j)] }
            })
            .collect()
    }
}

fn check_full_rank(xtx: &DMatrix<f64>) -> Result<()> {
    let q = xtx.nrows();
    if q == 0 {
        return Ok(());
    }
    let Some(chol) = xtx.clone().cholesky() else {
        return Err(Error::UnidentifiableFixedEffects("fixed-effects design is rank deficient".into()));
    };
    let l = chol.l_dirty();
    for i in 0..q {
        let rel = l[(i, i)] * l[(i, i)] / xtx[(i, i)];
        if !(rel > 1e-10) {
            return Err(Error::UnidentifiableFixedEffects(format!(
                "fixed column {i} is (nearly) collinear with the preceding columns"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn one_way(k: usize, m: usize, tau: f64, sigma: f64, seed: u64) -> LmmProblem {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = k * m;
        let mut y = Vec::with_capacity(n);
        let mut trial = Vec::with_capacity(n);
        for g in 0..k {
            let b = tau * rng.sample::<f64, _>(StandardNormal);
            for _ in 0..m {
                y.push(3.0 + b + sigma * rng.sample::<f64, _>(StandardNormal));
                trial.push(g + 1);
            }
        }
        let x = DMatrix::from_element(n, 1, 1.0);
        let z = DMatrix::from_fn(n, k, |i, c| f64::from(trial[i] == c + 1));
        let design = Design::custom(x, z, vec![RandomTerm::Intercept; k], k).unwrap();
        LmmProblem::from_design(y, design, trial).unwrap()
    }

    fn anova(p: &LmmProblem, k: usize, m: usize) -> (f64, f64, Vec<f64>, f64) {
        let y = &p.response;
        let grand = y.iter().sum::<f64>() / y.len() as f64;
        let means: Vec<f64> = (0..k).map(|g| y[g * m..(g + 1) * m].iter().sum::<f64>() / m as f64).collect();
        let ssb: f64 = means.iter().map(|mu| m as f64 * (mu - grand).powi(2)).sum();
        let ssw: f64 = (0..k).map(|g| y[g * m..(g + 1) * m].iter().map(|v| (v - means[g]).powi(2)).sum::<f64>()).sum();
        let msb = ssb / (k - 1) as f64;
        let msw = ssw / (k * (m - 1)) as f64;
        (msb, msw, means, grand)
    }

    #[test]
    fn balanced_one_way_matches_anova() {
        for seed in 0..20 {
            let (k, m) = (6, 8);
            let p = one_way(k, m, 2.0, 1.0, seed);
            let (msb, msw, _, _) = anova(&p, k, m);
            let fit = fit_lmm(&p).unwrap();
            if msb > msw {
                let tau = (msb - msw) / m as f64;
                assert!((fit.vc.tau0_sq - tau).abs() <= 1e-6 * tau, "{} vs {tau}", fit.vc.tau0_sq);
                assert!((fit.vc.sigma_sq - msw).abs() <= 1e-6 * msw);
            }
        }
    }

    #[test]
    fn boundary_estimate_when_between_is_small() {
        let mut hit = false;
        for seed in 0..40 {
            let (k, m) = (5, 6);
            let p = one_way(k, m, 0.0, 1.0, 100 + seed);
            let (msb, msw, _, _) = anova(&p, k, m);
            if msb < msw {
                hit = true;
                let fit = fit_lmm(&p).unwrap();
                assert!(fit.vc.tau0_sq < 1e-12, "{}", fit.vc.tau0_sq);
                let y = &p.response;
                let mean = y.iter().sum::<f64>() / y.len() as f64;
                let s2 = y.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (y.len() - 1) as f64;
                assert!((fit.vc.sigma_sq - s2).abs() < 1e-9 * s2);
                assert!(fit.re.b0.iter().all(|b| b.abs() < 1e-5));
            }
        }
        assert!(hit);
    }

    #[test]
    fn blup_is_shrunken_group_mean() {
        let (k, m) = (5, 10);
        let p = one_way(k, m, 3.0, 1.0, 77);
        let (_, _, means, grand) = anova(&p, k, m);
        let fit = fit_lmm(&p).unwrap();
        assert!(fit.vc.tau0_sq > 0.0);
        let shrink = m as f64 * fit.vc.tau0_sq / (m as f64 * fit.vc.tau0_sq + fit.vc.sigma_sq);
        for g in 0..k {
            let expect = shrink * (means[g] - grand);
            assert!((fit.re.b0[g] - expect).abs() < 1e-6 * (1.0 + expect.abs()), "{} vs {expect}", fit.re.b0[g]);
        }
        let direct = blups(&p, &fit.vc, &fit.beta).unwrap();
        for g in 0..k {
            assert!((direct.b0[g] - fit.re.b0[g]).abs() < 1e-8);
        }
    }

    #[test]
    fn single_trial_blup_is_zero() {
        let p = one_way(1, 30, 2.0, 1.0, 5);
        let fit = fit_lmm(&p).unwrap();
        assert!(fit.re.b0[0].abs() < 1e-6, "{}", fit.re.b0[0]);
        let direct = blups(&p, &VarianceComponents { tau0_sq: 4.0, tau1_sq: 0.0, sigma_sq: 1.0 }, &fit.beta).unwrap();
        assert!(direct.b0[0].abs() < 1e-10);
    }

    #[test]
    fn zero_variance_gives_zero_blups() {
        let p = one_way(4, 5, 1.0, 1.0, 9);
        let re = blups(&p, &VarianceComponents { tau0_sq: 0.0, tau1_sq: 0.0, sigma_sq: 1.0 }, &[3.0]).unwrap();
        assert!(re.b0.iter().all(|&b| b == 0.0));
    }

    #[test]
    fn boundary_criterion_equals_ols_reml() {
        let p = one_way(4, 7, 1.0, 1.0, 13);
        let sys = System::new(&p).unwrap();
        let y = &p.response;
        let n = y.len() as f64;
        let mean = y.iter().sum::<f64>() / n;
        let rss: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
        // OLS with intercept only: X'X = n.
        let ols = n.ln() + (n - 1.0) * (1.0 + (2.0 * std::f64::consts::PI * rss / (n - 1.0)).ln());
        assert!((sys.criterion(&[0.0], Criterion::Reml) - ols).abs() < 1e-9 * ols.abs());
    }

    #[test]
    fn rank_deficient_design_is_rejected() {
        let n = 10;
        let x = DMatrix::from_fn(n, 2, |_, _| 1.0);
        let z = DMatrix::from_fn(n, 2, |i, c| f64::from(i % 2 == c));
        let design = Design::custom(x, z, vec![RandomTerm::Intercept; 2], 2).unwrap();
        let trial = (0..n).map(|i| i % 2 + 1).collect();
        let p = LmmProblem::from_design(vec![1.0; n], design, trial).unwrap();
        assert!(matches!(fit_lmm(&p), Err(Error::UnidentifiableFixedEffects(_))));
    }
}
