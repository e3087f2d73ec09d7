//! Gaussian node model `y_adj = γ + θ t + ε` fitted by least squares.
//!
//! With an identity link the random-effect offset is subtracted from the
//! response before fitting, so the caller passes `y - z'b` directly.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct NodeFit {
    pub gamma_hat: f64,
    pub theta_hat: f64,
    /// ML residual variance `rss / n`.
    pub sigma_hat_sq: f64,
    pub rss: f64,
    pub n: usize,
    /// Per-observation score contributions `(e_i, e_i t_i)`, without the
    /// `1/σ²` factor.
    pub scores: Vec<[f64; 2]>,
}

pub fn fit_node(y_adj: &[f64], trt: &[u8]) -> Result<NodeFit> {
    let n = y_adj.len();
    if trt.len() != n {
        return Err(Error::DimensionMismatch { what: "treatment vector", expected: n, got: trt.len() });
    }
    if n < 2 {
        return Err(Error::DegenerateNode(format!("{n} observation(s)")));
    }
    let mut count = [0usize; 2];
    let mut sum = [0.0f64; 2];
    for (&y, &t) in y_adj.iter().zip(trt) {
        count[t as usize] += 1;
        sum[t as usize] += y;
    }
    if count[0] == 0 || count[1] == 0 {
        return Err(Error::DegenerateNode("treatment effect not estimable: only one arm present".into()));
    }
    let gamma_hat = sum[0] / count[0] as f64;
    let theta_hat = sum[1] / count[1] as f64 - gamma_hat;
    let mean = [gamma_hat, gamma_hat + theta_hat];
    let mut rss = 0.0;
    let scores: Vec<[f64; 2]> = y_adj
        .iter()
        .zip(trt)
        .map(|(&y, &t)| {
            let e = y - mean[t as usize];
            rss += e * e;
            [e, e * f64::from(t)]
        })
        .collect();
    Ok(NodeFit { gamma_hat, theta_hat, sigma_hat_sq: rss / n as f64, rss, n, scores })
}

/// Split objective of a node fit. For the Gaussian identity-link model the
/// negative log-likelihood is monotone in the residual sum of squares, so
/// the RSS itself is used.
pub fn objective(fit: &NodeFit) -> f64 {
    fit.rss
}

/// Gaussian ML log-likelihood of a node fit at `σ² = rss/n`.
pub fn loglik(fit: &NodeFit) -> f64 {
    gaussian_profile_loglik(fit.rss, fit.n)
}

pub(crate) fn gaussian_profile_loglik(rss: f64, n: usize) -> f64 {
    let n = n as f64;
    if rss <= 0.0 {
        return f64::INFINITY;
    }
    -0.5 * n * (1.0 + (2.0 * std::f64::consts::PI * rss / n).ln())
}

/// Running per-arm sums for O(1) least-squares updates while scanning splits.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct ArmStats {
    count: [usize; 2],
    sum: [f64; 2],
    sumsq: [f64; 2],
}

impl ArmStats {
    pub fn push(&mut self, y: f64, t: u8) {
        let a = t as usize;
        self.count[a] += 1;
        self.sum[a] += y;
        self.sumsq[a] += y * y;
    }

    pub fn n(&self) -> usize {
        self.count[0] + self.count[1]
    }

    pub fn both_arms(&self) -> bool {
        self.count[0] > 0 && self.count[1] > 0
    }

    pub fn rss(&self) -> f64 {
        let mut rss = 0.0;
        for a in 0..2 {
            if self.count[a] > 0 {
                rss += self.sumsq[a] - self.sum[a] * self.sum[a] / self.count[a] as f64;
            }
        }
        rss.max(0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zero_response_gives_zero_fit() {
        let f = fit_node(&[0.0; 6], &[0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!((f.gamma_hat, f.theta_hat, f.rss), (0.0, 0.0, 0.0));
        assert_eq!(objective(&f), 0.0);
    }

    #[test]
    fn six_observation_example() {
        let f = fit_node(&[1.0, 2.0, 3.0, 4.0, 5.0, 6.0], &[0, 0, 0, 1, 1, 1]).unwrap();
        assert_eq!(f.gamma_hat, 2.0);
        assert_eq!(f.theta_hat, 3.0);
        assert!((objective(&f) - 4.0).abs() < 1e-12);
        let resid: Vec<f64> = f.scores.iter().map(|s| s[0]).collect();
        assert_eq!(resid, vec![-1.0, 0.0, 1.0, -1.0, 0.0, 1.0]);
    }

    #[test]
    fn perfect_fit_has_zero_objective() {
        let f = fit_node(&[3.0, 3.0, 7.0, 7.0], &[0, 0, 1, 1]).unwrap();
        assert_eq!(objective(&f), 0.0);
    }

    #[test]
    fn single_arm_is_degenerate() {
        assert!(matches!(fit_node(&[1.0, 2.0, 3.0], &[1, 1, 1]), Err(Error::DegenerateNode(_))));
        assert!(matches!(fit_node(&[1.0], &[0]), Err(Error::DegenerateNode(_))));
    }

    #[test]
    fn arm_stats_match_direct_fit() {
        let y = [1.5, -2.0, 0.25, 4.0, 3.0];
        let t = [0, 1, 0, 1, 1];
        let mut s = ArmStats::default();
        for (&yi, &ti) in y.iter().zip(&t) {
            s.push(yi, ti);
        }
        let f = fit_node(&y, &t).unwrap();
        assert!((s.rss() - f.rss).abs() < 1e-12);
    }

    fn sample() -> impl Strategy<Value = (Vec<f64>, Vec<u8>)> {
        (4usize..40).prop_flat_map(|n| {
            (
                prop::collection::vec(-100.0f64..100.0, n),
                prop::collection::vec(0u8..2, n - 2).prop_map(|mut t| {
                    t.push(0);
                    t.push(1);
                    t
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn scores_sum_to_zero((y, t) in sample()) {
            let f = fit_node(&y, &t).unwrap();
            let scale = y.iter().fold(1.0f64, |m, v| m.max(v.abs()));
            for c in 0..2 {
                let s: f64 = f.scores.iter().map(|r| r[c]).sum();
                prop_assert!(s.abs() <= 1e-8 * y.len() as f64 * scale);
            }
        }

        #[test]
        fn permutation_invariant((y, t) in sample(), rot in 0usize..40) {
            let n = y.len();
            let r = rot % n;
            let y2: Vec<f64> = (0..n).map(|i| y[(i + r) % n]).collect();
            let t2: Vec<u8> = (0..n).map(|i| t[(i + r) % n]).collect();
            let a = fit_node(&y, &t).unwrap();
            let b = fit_node(&y2, &t2).unwrap();
            prop_assert!((a.gamma_hat - b.gamma_hat).abs() < 1e-9);
            prop_assert!((a.theta_hat - b.theta_hat).abs() < 1e-9);
            prop_assert!((a.rss - b.rss).abs() < 1e-7 * (1.0 + a.rss));
        }

        #[test]
        fn split_never_increases_objective((y, t) in sample(), cut in 0usize..40) {
            let n = y.len();
            let parent = fit_node(&y, &t).unwrap();
            let c = 1 + cut % (n - 1);
            let child = |ys: &[f64], ts: &[u8]| {
                let mut s = ArmStats::default();
                for (&yi, &ti) in ys.iter().zip(ts) { s.push(yi, ti); }
                s.rss()
            };
            let total = child(&y[..c], &t[..c]) + child(&y[c..], &t[c..]);
            prop_assert!(total <= objective(&parent) * (1.0 + 1e-9) + 1e-9);
        }
    }
}
