//! Regenerates `src/fluctest/table.rs`: simulated finite-sample quantiles of
//! the two-parameter supLM statistic under the null.
//!
//! Scores are i.i.d. bivariate standard normal, centered, and normalized by
//! their empirical covariance exactly as in `fluctest::lm_process`, so the
//! table describes the statistic the library computes.
//!
//!     cargo run --release --example gen_suplm_table -- 200000 > src/fluctest/table.rs
//!
//! Extra arguments restrict the run to the listed sizes and print only their
//! blocks, for patching a partially generated table.

use metamob::fluctest::{lm_process, trim_range};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

const SIZES: [usize; 32] = [
    4, 5, 6, 7, 8, 10, 12, 15, 18, 20, 25, 30, 35, 40, 50, 60, 70, 80, 100, 120, 150, 200, 250, 300, 400, 500,
    700, 1000, 1500, 2000, 3000, 5000,
];
const TRIMS: [f64; 10] = [0.05, 0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5];
const TAIL_PROBS: [f64; 47] = [
    0.999, 0.995, 0.99, 0.98, 0.97, 0.96, 0.95, 0.93, 0.9, 0.875, 0.85, 0.8, 0.75, 0.7, 0.65, 0.6, 0.55, 0.5,
    0.45, 0.4, 0.35, 0.3, 0.25, 0.2, 0.175, 0.15, 0.125, 0.1, 0.08, 0.06, 0.05, 0.04, 0.03, 0.025, 0.02, 0.015,
    0.01, 0.0075, 0.005, 0.004, 0.003, 0.0025, 0.002, 0.0015, 0.001, 0.0007, 0.0005,
];

fn quantile(sorted: &[f64], prob: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * prob;
    let i = h.floor() as usize;
    let w = h - i as f64;
    if i + 1 < sorted.len() {
        sorted[i] * (1.0 - w) + sorted[i + 1] * w
    } else {
        sorted[i]
    }
}

fn simulate(n: usize, reps: usize) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + n as u64);
    // Narrowest range first so the running maximum only ever grows.
    let ranges: Vec<(usize, usize)> = TRIMS.iter().rev().map(|&t| trim_range(n, t)).collect();
    let mut draws = vec![Vec::with_capacity(reps); TRIMS.len()];
    let mut scores = vec![[0.0f64; 2]; n];
    while draws[0].len() < reps {
        let mut mean = [0.0f64; 2];
        for s in scores.iter_mut() {
            *s = [rng.sample(StandardNormal), rng.sample(StandardNormal)];
            mean[0] += s[0];
            mean[1] += s[1];
        }
        for s in scores.iter_mut() {
            s[0] -= mean[0] / n as f64;
            s[1] -= mean[1] / n as f64;
        }
        let Some(process) = lm_process(&scores) else { continue };
        let mut best = 0.0f64;
        let (mut cur_lo, mut cur_hi) = (usize::MAX, 0usize);
        for (r, &(lo, hi)) in ranges.iter().enumerate() {
            for i in lo..=hi {
                if i < cur_lo || i > cur_hi {
                    best = best.max(process[i - 1]);
                }
            }
            cur_lo = cur_lo.min(lo);
            cur_hi = cur_hi.max(hi);
            draws[TRIMS.len() - 1 - r].push(best);
        }
    }
    draws
        .into_iter()
        .map(|mut d| {
            d.sort_by(f64::total_cmp);
            TAIL_PROBS.iter().map(|&p| quantile(&d, 1.0 - p)).collect()
        })
        .collect()
}

fn main() {
    let reps: usize = std::env::args().nth(1).map(|s| s.parse().expect("reps")).unwrap_or(200_000);
    let only: Vec<usize> = std::env::args().skip(2).map(|s| s.parse().expect("size")).collect();
    if !only.is_empty() {
        for n in only {
            print_block(n, reps);
        }
        return;
    }
    println!("// @generated by examples/gen_suplm_table.rs ({reps} replications per cell); do not edit.");
    println!("// QUANTILES[size][trim][level] is the (1 - TAIL_PROBS[level]) quantile of the");
    println!("// supLM statistic for SIZES[size] observations and trimming fraction TRIMS[trim].");
    println!();
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(", ");
    println!("pub(super) const TAIL_PROBS: [f64; {}] = [{}];", TAIL_PROBS.len(), fmt(&TAIL_PROBS));
    println!("pub(super) const TRIMS: [f64; {}] = [{}];", TRIMS.len(), fmt(&TRIMS));
    let sizes: Vec<String> = SIZES.iter().map(|s| s.to_string()).collect();
    println!("pub(super) const SIZES: [usize; {}] = [{}];", SIZES.len(), sizes.join(", "));
    println!(
        "pub(super) static QUANTILES: [[[f64; {}]; {}]; {}] = [",
        TAIL_PROBS.len(),
        TRIMS.len(),
        SIZES.len()
    );
    for &n in &SIZES {
        print_block(n, reps);
    }
    println!("];");
}

fn print_block(n: usize, reps: usize) {
    eprintln!("n = {n}");
    println!("    // n = {n}");
    println!("    [");
    for q in simulate(n, reps) {
        let cells: Vec<String> = q.iter().map(|x| format!("{:.5e}", x)).collect();
        println!("        [{}],", cells.join(", "));
    }
    println!("    ],");
}
