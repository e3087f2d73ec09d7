//! Null distribution of the two-parameter supLM statistic.
//!
//! The asymptotic law (supremum of a squared, standardized Brownian bridge)
//! overstates the statistic noticeably at node sizes of a few hundred,
//! because the process is only observed at `n` points. The default p-value
//! map therefore interpolates a table of simulated finite-sample quantiles,
//! indexed by sample size and trimming fraction; see
//! `examples/gen_suplm_table.rs` for the generator. Interpolation is linear in
//! the trimming fraction and in `1/sqrt(n)`, and linear in `ln p` between
//! tabulated quantiles.
//!
//! The Monte-Carlo functions simulate the limiting process directly on a
//! regular grid and serve as an independent check and as the fallback for
//! trimming fractions outside the table.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::table::{QUANTILES, SIZES, TAIL_PROBS, TRIMS};
use super::trim_range;

const FALLBACK_GRID: usize = 1000;
const FALLBACK_REPS: usize = 20_000;

/// Asymptotic-tail decay used past the last tabulated quantile is never
/// allowed to be flatter than this (`ln p` per unit of statistic).
const MIN_TAIL_SLOPE: f64 = 0.25;

pub fn tabulated_pvalue(statistic: f64, n: usize, trim: f64) -> f64 {
    tabulated_log_pvalue(statistic, n, trim).exp()
}

/// `ln p` for a supLM statistic computed on `n` observations.
pub fn tabulated_log_pvalue(statistic: f64, n: usize, trim: f64) -> f64 {
    if !(statistic > 0.0) {
        return 0.0;
    }
    let trim = trim.min(0.5);
    if trim < TRIMS[0] || n < SIZES[0] {
        let sample = fallback_sample(trim);
        let p = upper_tail(&sample, statistic).max(0.5 / sample.len() as f64);
        return p.ln();
    }
    let q = interpolated_quantiles(n, trim);
    log_tail_from_quantiles(&q, statistic)
}

fn bracket(grid: &[f64], x: f64) -> (usize, f64) {
    // grid ascending; returns (i, w) with x ≈ (1-w) grid[i] + w grid[i+1]
    if x <= grid[0] {
        return (0, 0.0);
    }
    for i in 0..grid.len() - 1 {
        if x <= grid[i + 1] {
            return (i, (x - grid[i]) / (grid[i + 1] - grid[i]));
        }
    }
    (grid.len() - 2, 1.0)
}

fn interpolated_quantiles(n: usize, trim: f64) -> Vec<f64> {
    let trims: Vec<f64> = TRIMS.to_vec();
    let (ti, tw) = bracket(&trims, trim);

    // Sizes in 1/sqrt(n) coordinates, which is how discreteness error scales.
    let u = |m: usize| 1.0 / (m as f64).sqrt();
    let last = SIZES.len() - 1;
    let (si, sw) = if n >= SIZES[last] {
        // Linear extrapolation towards the continuous limit (u = 0).
        let (ua, ub) = (u(SIZES[last - 1]), u(SIZES[last]));
        (last - 1, (u(n) - ua) / (ub - ua))
    } else {
        let mut i = 0;
        while SIZES[i + 1] < n {
            i += 1;
        }
        let (ua, ub) = (u(SIZES[i]), u(SIZES[i + 1]));
        (i, (u(n) - ua) / (ub - ua))
    };

    let mut q = vec![0.0; TAIL_PROBS.len()];
    for (l, out) in q.iter_mut().enumerate() {
        let at = |s: usize, t: usize| QUANTILES[s][t][l];
        let lo = (1.0 - tw) * at(si, ti) + tw * at(si, ti + 1);
        let hi = (1.0 - tw) * at(si + 1, ti) + tw * at(si + 1, ti + 1);
        *out = (1.0 - sw) * lo + sw * hi;
    }
    for l in 1..q.len() {
        if q[l] < q[l - 1] {
            q[l] = q[l - 1];
        }
    }
    q
}

fn log_tail_from_quantiles(q: &[f64], x: f64) -> f64 {
    let lp: Vec<f64> = TAIL_PROBS.iter().map(|p| p.ln()).collect();
    if x <= q[0] {
        return lp[0] * x / q[0];
    }
    for l in 0..q.len() - 1 {
        if x <= q[l + 1] {
            let span = q[l + 1] - q[l];
            if span <= 0.0 {
                return lp[l + 1];
            }
            let w = (x - q[l]) / span;
            return (1.0 - w) * lp[l] + w * lp[l + 1];
        }
    }
    let k = q.len() - 1;
    let slope = ((lp[k - 1] - lp[k]) / (q[k] - q[k - 1]).max(1e-12)).max(MIN_TAIL_SLOPE);
    lp[k] - slope * (x - q[k])
}

fn upper_tail(sorted: &[f64], x: f64) -> f64 {
    let below = sorted.partition_point(|&v| v < x);
    (sorted.len() - below) as f64 / sorted.len() as f64
}

/// Sorted draws of the supLM statistic's limiting distribution, simulated
/// as a two-dimensional Brownian bridge observed on `grid` equispaced points.
pub fn limiting_null_sample(trim: f64, grid: usize, reps: usize, seed: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = trim_range(grid, trim);
    let m = grid as f64;
    let scale = 1.0 / m.sqrt();
    let mut w = vec![[0.0f64; 2]; grid];
    let mut out = Vec::with_capacity(reps);
    for _ in 0..reps {
        let mut acc = [0.0f64; 2];
        for slot in w.iter_mut() {
            acc[0] += rng.sample::<f64, _>(StandardNormal) * scale;
            acc[1] += rng.sample::<f64, _>(StandardNormal) * scale;
            *slot = acc;
        }
        let end = w[grid - 1];
        let mut best = 0.0f64;
        for i in lo..=hi {
            let t = i as f64 / m;
            let b0 = w[i - 1][0] - t * end[0];
            let b1 = w[i - 1][1] - t * end[1];
            best = best.max((b0 * b0 + b1 * b1) / (t * (1.0 - t)));
        }
        out.push(best);
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Monte-Carlo p-value from the simulated limiting process.
pub fn monte_carlo_pvalue(statistic: f64, trim: f64, grid: usize, reps: usize, seed: u64) -> f64 {
    upper_tail(&limiting_null_sample(trim, grid, reps, seed), statistic)
}

fn fallback_sample(trim: f64) -> Arc<Vec<f64>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<f64>>>>> = OnceLock::new();
    let key = trim.to_bits();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().unwrap().get(&key) {
        return Arc::clone(s);
    }
    let sample = Arc::new(limiting_null_sample(trim, FALLBACK_GRID, FALLBACK_REPS, key));
    cache.lock().unwrap().entry(key).or_insert(sample).clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pvalue_is_monotone_in_statistic() {
        for &(n, trim) in &[(40, 0.5), (75, 0.27), (200, 0.1), (1000, 0.1), (20_000, 0.1)] {
            let mut prev = 1.0;
            for i in 0..400 {
                let x = i as f64 * 0.1;
                let p = tabulated_pvalue(x, n, trim);
                assert!(p <= prev + 1e-15 && (0.0..=1.0).contains(&p), "n={n} x={x} p={p}");
                prev = p;
            }
        }
    }

    #[test]
    fn half_trim_is_close_to_chi_square_two() {
        // One evaluation point at t = 1/2: asymptotically chi-square(2), p = exp(-x/2).
        let p = tabulated_pvalue(2.0 * 20f64.ln(), 2000, 0.5);
        assert!((p - 0.05).abs() < 0.006, "{p}");
    }

    #[test]
    fn table_agrees_with_limiting_process_on_matching_grid() {
        let sample = limiting_null_sample(0.1, 1000, 20_000, 42);
        for &p in &[0.5, 0.1, 0.05, 0.01] {
            let x = sample[((1.0 - p) * sample.len() as f64) as usize];
            let tab = tabulated_pvalue(x, 1000, 0.1);
            assert!((tab - p).abs() < 0.012 + 0.1 * p, "p={p} table={tab}");
        }
    }

    #[test]
    fn fallback_covers_small_trims() {
        let p = tabulated_pvalue(12.0, 500, 0.02);
        assert!(p > 0.0 && p < 0.5);
    }
}
