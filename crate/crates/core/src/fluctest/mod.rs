//! Score-based parameter instability tests.
//!
//! For each candidate covariate the node's score contributions are ordered
//! by that covariate and cumulated. The supLM statistic is the largest
//! `Ĵ`-normalized squared norm of the cumulative score process, scaled by
//! `t(1-t)`, over the trimmed range `[trim, 1-trim]`. Ties in the ordering
//! variable are pooled: the process is only evaluated where the covariate
//! value changes.

mod pvalue;
mod table;

pub use pvalue::{limiting_null_sample, monte_carlo_pvalue, tabulated_log_pvalue, tabulated_pvalue};

/// Outcome of one supLM test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupLmTest {
    pub statistic: f64,
    pub p_value: f64,
    /// `ln(p_value)`, kept separately so tiny p-values still rank correctly.
    pub log_p: f64,
}

impl SupLmTest {
    fn uninformative() -> Self {
        SupLmTest { statistic: 0.0, p_value: 1.0, log_p: 0.0 }
    }
}

/// Per-covariate test results for one node and the chosen split variable.
#[derive(Debug, Clone, PartialEq)]
pub struct InstabilityResult {
    pub tests: Vec<SupLmTest>,
    pub selected: Option<usize>,
    pub adjusted_alpha: f64,
}

/// Observation counts `lo..=hi` (size of the left segment) inside the
/// trimmed range for `n` observations.
pub fn trim_range(n: usize, trim: f64) -> (usize, usize) {
    let lo = ((n as f64 * trim).ceil() as usize).min(n / 2).max(1);
    (lo, n.saturating_sub(lo))
}

/// Inverse of the empirical score covariance, or `None` when it is singular.
fn inverse_covariance(scores: &[[f64; 2]]) -> Option<[f64; 3]> {
    let n = scores.len() as f64;
    let (mut a, mut b, mut c) = (0.0, 0.0, 0.0);
    for s in scores {
        a += s[0] * s[0];
        b += s[0] * s[1];
        c += s[1] * s[1];
    }
    let (a, b, c) = (a / n, b / n, c / n);
    let det = a * c - b * b;
    if !(a > 0.0 && c > 0.0) || det <= 1e-10 * a * c {
        return None;
    }
    Some([c / det, -b / det, a / det])
}

/// Normalized LM process for scores already in covariate order: entry
/// `i-1` is the statistic after the first `i` observations, `i = 1..n-1`.
/// Returns `None` for singular score covariance.
pub fn lm_process(ordered_scores: &[[f64; 2]]) -> Option<Vec<f64>> {
    let n = ordered_scores.len();
    let inv = inverse_covariance(ordered_scores)?;
    let nf = n as f64;
    let mut s = [0.0f64; 2];
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    for (i, psi) in ordered_scores.iter().enumerate().take(n.saturating_sub(1)) {
        s[0] += psi[0];
        s[1] += psi[1];
        let t = (i + 1) as f64 / nf;
        let quad = inv[0] * s[0] * s[0] + 2.0 * inv[1] * s[0] * s[1] + inv[2] * s[1] * s[1];
        out.push(quad / (nf * t * (1.0 - t)));
    }
    Some(out)
}

/// Stable ordering of observations by `z`, ties broken by position.
pub(crate) fn order_by(z: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..z.len()).collect();
    idx.sort_by(|&a, &b| z[a].total_cmp(&z[b]).then(a.cmp(&b)));
    idx
}

/// supLM statistic only (no p-value).
pub fn suplm_statistic(scores: &[[f64; 2]], z: &[f64], trim: f64) -> f64 {
    assert_eq!(scores.len(), z.len(), "scores and ordering variable differ in length");
    let n = scores.len();
    if n < 2 {
        return 0.0;
    }
    let order = order_by(z);
    let ordered: Vec<[f64; 2]> = order.iter().map(|&i| scores[i]).collect();
    let Some(process) = lm_process(&ordered) else {
        return 0.0;
    };
    let (lo, hi) = trim_range(n, trim);
    let mut stat = 0.0f64;
    for i in lo..=hi.min(n - 1) {
        // Boundary between positions i-1 and i (0-based) must separate distinct values.
        if z[order[i - 1]] < z[order[i]] {
            stat = stat.max(process[i - 1]);
        }
    }
    stat
}

/// supLM test of the scores against ordering variable `z`, with p-value
/// from the tabulated finite-sample null distribution.
pub fn suplm_test(scores: &[[f64; 2]], z: &[f64], trim: f64) -> SupLmTest {
    let n = scores.len();
    if n < 4 || inverse_covariance(scores).is_none() {
        return SupLmTest::uninformative();
    }
    let statistic = suplm_statistic(scores, z, trim);
    if statistic <= 0.0 {
        return SupLmTest::uninformative();
    }
    let log_p = tabulated_log_pvalue(statistic, n, trim);
    SupLmTest { statistic, p_value: log_p.exp(), log_p }
}

/// Bonferroni selection over `p` covariates: the covariate with the smallest
/// p-value (lowest index on ties) if that p-value is at most `alpha / p`.
pub fn select_split_variable(p_values: &[f64], alpha: f64) -> Option<usize> {
    let logs: Vec<f64> = p_values.iter().map(|p| p.ln()).collect();
    select_by_log_p(&logs, alpha)
}

pub(crate) fn select_by_log_p(log_p: &[f64], alpha: f64) -> Option<usize> {
    if log_p.is_empty() {
        return None;
    }
    let mut best = 0;
    for (j, &lp) in log_p.iter().enumerate() {
        if lp < log_p[best] {
            best = j;
        }
    }
    let adjusted = alpha / log_p.len() as f64;
    (log_p[best] <= adjusted.ln()).then_some(best)
}

/// Tests every covariate and applies the Bonferroni selection rule.
pub fn instability_tests(scores: &[[f64; 2]], covariates: &[&[f64]], trim: f64, alpha: f64) -> InstabilityResult {
    let tests: Vec<SupLmTest> = covariates.iter().map(|z| suplm_test(scores, z, trim)).collect();
    let logs: Vec<f64> = tests.iter().map(|t| t.log_p).collect();
    InstabilityResult {
        selected: select_by_log_p(&logs, alpha),
        adjusted_alpha: alpha / covariates.len().max(1) as f64,
        tests,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn normal_scores(n: usize, rng: &mut ChaCha8Rng) -> Vec<[f64; 2]> {
        let mut s: Vec<[f64; 2]> = (0..n).map(|_| [rng.sample(StandardNormal), rng.sample(StandardNormal)]).collect();
        for c in 0..2 {
            let m = s.iter().map(|r| r[c]).sum::<f64>() / n as f64;
            s.iter_mut().for_each(|r| r[c] -= m);
        }
        s
    }

    #[test]
    fn zero_scores_are_uninformative() {
        let t = suplm_test(&[[0.0, 0.0]; 50], &(0..50).map(f64::from).collect::<Vec<_>>(), 0.1);
        assert_eq!((t.statistic, t.p_value), (0.0, 1.0));
    }

    #[test]
    fn bonferroni_examples() {
        assert_eq!(select_split_variable(&[0.3, 0.4], 0.05), None);
        assert_eq!(select_split_variable(&[0.001, 0.5], 0.05), Some(0));
        let mut p = vec![0.5; 15];
        p[0] = 0.02;
        p[1] = 0.03;
        assert_eq!(select_split_variable(&p, 0.05), None);
        assert_eq!(select_split_variable(&[0.001, 0.001], 0.05), Some(0));
    }

    #[test]
    fn trim_range_is_symmetric() {
        assert_eq!(trim_range(200, 0.1), (20, 180));
        assert_eq!(trim_range(40, 0.5), (20, 20));
        assert_eq!(trim_range(5, 0.5), (2, 3));
    }

    #[test]
    fn statistic_matches_naive_formula() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 30;
        let s = normal_scores(n, &mut rng);
        let z: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let order = order_by(&z);
        // Naive: explicit Ĵ inverse via 2x2 formula, cumulative sums.
        let j = s.iter().fold([0.0; 3], |a, r| [a[0] + r[0] * r[0], a[1] + r[0] * r[1], a[2] + r[1] * r[1]]);
        let (a, b, c) = (j[0] / n as f64, j[1] / n as f64, j[2] / n as f64);
        let det = a * c - b * b;
        let mut best: f64 = 0.0;
        for i in 3..=27 {
            let (mut u, mut v) = (0.0, 0.0);
            for &k in &order[..i] {
                u += s[k][0];
                v += s[k][1];
            }
            let t = i as f64 / n as f64;
            let q = (c * u * u - 2.0 * b * u * v + a * v * v) / det / n as f64;
            best = best.max(q / (t * (1.0 - t)));
        }
        assert!((suplm_statistic(&s, &z, 0.1) - best).abs() < 1e-10);
    }

    #[test]
    fn ties_are_pooled() {
        // All z equal: no admissible boundary, statistic 0.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = normal_scores(40, &mut rng);
        assert_eq!(suplm_statistic(&s, &[1.0; 40], 0.1), 0.0);
    }

    #[test]
    fn invariant_under_linear_maps_and_monotone_z() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let n = 100;
            let s = normal_scores(n, &mut rng);
            let z: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
            let m = [[2.0, -1.0], [0.5, 3.0]];
            let s2: Vec<[f64; 2]> = s
                .iter()
                .map(|r| [m[0][0] * r[0] + m[0][1] * r[1], m[1][0] * r[0] + m[1][1] * r[1]])
                .collect();
            let z2: Vec<f64> = z.iter().map(|v| (3.0 * v).exp()).collect();
            let a = suplm_statistic(&s, &z, 0.1);
            let b = suplm_statistic(&s2, &z2, 0.1);
            assert!((a - b).abs() < 1e-9 * (1.0 + a), "{a} vs {b}");
        }
    }

    #[test]
    fn detects_a_break() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let n = 300;
        let z: Vec<f64> = (0..n).map(|_| rng.random::<f64>()).collect();
        let t: Vec<u8> = (0..n).map(|i| (i % 2) as u8).collect();
        let y: Vec<f64> = (0..n)
            .map(|i| {
                let eff = if z[i] > 0.5 { 3.0 } else { -3.0 };
                eff * f64::from(t[i]) + rng.sample::<f64, _>(StandardNormal)
            })
            .collect();
        let fit = crate::linmod::fit_node(&y, &t).unwrap();
        let res = suplm_test(&fit.scores, &z, 0.1);
        assert!(res.p_value < 1e-6, "{res:?}");
    }
}
