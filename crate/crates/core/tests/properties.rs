//! Invariants of the mixed-model fit, trees and designs on random inputs.

use metamob::design::design_vectors;
use metamob::lmm::{fit_lmm, fit_lmm_with, Criterion, LmmOptions, LmmProblem};
use metamob::mobtree::{grow_tree, TreeControls};
use metamob::{IpdDataset, ModelSpec, Tree};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

/// Two-subgroup data with trial effects; the assignment splits on `x`.
fn dataset(seed: u64, k: usize, per_trial: usize, tau0: f64, tau1: f64) -> (IpdDataset, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b: Vec<(f64, f64)> = (0..k)
        .map(|_| (tau0 * rng.sample::<f64, _>(StandardNormal), tau1 * rng.sample::<f64, _>(StandardNormal)))
        .collect();
    let (mut y, mut trt, mut trial, mut x) = (vec![], vec![], vec![], vec![]);
    for (g, &(b0, b1)) in b.iter().enumerate() {
        for i in 0..per_trial {
            let t = (i % 2) as u8;
            let xi: f64 = rng.random::<f64>() * 10.0;
            let theta = if xi > 5.0 { 2.0 } else { -1.0 };
            y.push(1.0 + b0 + (theta + b1) * f64::from(t) + rng.sample::<f64, _>(StandardNormal));
            trt.push(t);
            trial.push(g + 1);
            x.push(xi);
        }
    }
    let assignment = x.iter().map(|&v| if v > 5.0 { 2 } else { 1 }).collect();
    (IpdDataset::new(y, trt, trial, vec![x], vec!["x".into()]).unwrap(), assignment)
}

fn spec_strategy() -> impl Strategy<Value = ModelSpec> {
    prop::sample::select(vec![ModelSpec::M1, ModelSpec::M2, ModelSpec::M3])
}

fn close(a: f64, b: f64, rel: f64, abs: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()) + abs
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shifting_the_outcome_leaves_variances_and_blups(
        seed in 0u64..1000, spec in spec_strategy(), k in 3usize..7, shift in -50.0f64..50.0
    ) {
        let (data, assign) = dataset(seed, k, 24, 1.0, 0.7);
        let shifted = data.with_response(data.y().iter().map(|v| v + shift).collect()).unwrap();
        let a = fit_lmm(&LmmProblem::new(&data, &assign, spec).unwrap()).unwrap();
        let b = fit_lmm(&LmmProblem::new(&shifted, &assign, spec).unwrap()).unwrap();
        prop_assert!(close(a.vc.sigma_sq, b.vc.sigma_sq, 1e-5, 1e-9));
        prop_assert!(close(a.vc.tau0_sq, b.vc.tau0_sq, 1e-4, 1e-6));
        prop_assert!(close(a.vc.tau1_sq, b.vc.tau1_sq, 1e-4, 1e-6));
        for (x, y) in a.re.b0.iter().zip(&b.re.b0).chain(a.re.b1.iter().zip(&b.re.b1)) {
            prop_assert!(close(*x, *y, 1e-4, 1e-5), "{x} vs {y}");
        }
        for (ea, eb) in a.fixed.iter().zip(&b.fixed) {
            prop_assert!(close(ea.theta, eb.theta, 1e-4, 1e-5));
        }
    }

    #[test]
    fn scaling_the_outcome_scales_the_fit(
        seed in 0u64..1000, spec in spec_strategy(), scale in 0.1f64..20.0
    ) {
        let (data, assign) = dataset(seed, 5, 20, 1.0, 0.7);
        let scaled = data.with_response(data.y().iter().map(|v| v * scale).collect()).unwrap();
        let a = fit_lmm(&LmmProblem::new(&data, &assign, spec).unwrap()).unwrap();
        let b = fit_lmm(&LmmProblem::new(&scaled, &assign, spec).unwrap()).unwrap();
        let s2 = scale * scale;
        prop_assert!(close(a.vc.sigma_sq * s2, b.vc.sigma_sq, 1e-5, 1e-9));
        prop_assert!(close(a.vc.tau0_sq * s2, b.vc.tau0_sq, 1e-4, 1e-6 * s2));
        prop_assert!(close(a.vc.tau1_sq * s2, b.vc.tau1_sq, 1e-4, 1e-6 * s2));
        for (x, y) in a.re.b1.iter().zip(&b.re.b1) {
            prop_assert!(close(x * scale, *y, 1e-4, 1e-5 * scale));
        }
    }

    #[test]
    fn random_intercept_blups_sum_to_zero(seed in 0u64..1000, k in 2usize..9, tau0 in 0.0f64..3.0) {
        // Unequal trial sizes: the identity still holds for a common intercept.
        let (data, _) = dataset(seed, k, 15 + (seed % 7) as usize, tau0, 0.0);
        let assign = vec![1; data.n()];
        let fit = fit_lmm(&LmmProblem::new(&data, &assign, ModelSpec::M1).unwrap()).unwrap();
        let sum: f64 = fit.re.b0.iter().sum();
        let scale: f64 = fit.re.b0.iter().map(|b| b.abs()).sum::<f64>();
        prop_assert!(sum.abs() <= 1e-6 * (1.0 + scale), "sum {sum}");
    }

    #[test]
    fn ml_fit_beats_the_nested_fixed_effects_model(seed in 0u64..1000, spec in spec_strategy()) {
        let (data, assign) = dataset(seed, 6, 20, 0.8, 0.5);
        let problem = LmmProblem::new(&data, &assign, spec).unwrap();
        let options = LmmOptions { criterion: Criterion::Ml, ..LmmOptions::default() };
        let full = fit_lmm_with(&problem, &options).unwrap();
        // With all between-trial variances zero the model is OLS on X*.
        let x = &problem.design.x;
        let y = nalgebra::DVector::from_column_slice(&problem.response);
        let svd = x.clone().svd(true, true);
        let beta = svd.solve(&y, 1e-10).unwrap();
        let rss = (&y - x * beta).norm_squared();
        let n = problem.n() as f64;
        let nested = -0.5 * n * (1.0 + (2.0 * std::f64::consts::PI * rss / n).ln());
        prop_assert!(full.loglik >= nested - 1e-8, "{} < {nested}", full.loglik);
    }

    #[test]
    fn random_design_rows_sum_to_one_over_intercepts(seed in 0u64..1000, k in 1usize..6, spec in spec_strategy()) {
        let (data, assign) = dataset(seed, k, 12, 1.0, 1.0);
        let d = design_vectors(&data, &assign, spec).unwrap();
        if spec.has_random_intercept() {
            for i in 0..data.n() {
                let s: f64 = (0..k).map(|c| d.z[(i, c)]).sum();
                prop_assert_eq!(s, 1.0);
            }
        }
    }

    #[test]
    fn trees_respect_minsize_and_round_trip(seed in 0u64..1000, minsize in 10usize..40) {
        let (data, _) = dataset(seed, 4, 60, 0.0, 0.0);
        let controls = TreeControls { minsize, ..TreeControls::default() };
        let tree = grow_tree(&data, &vec![0.0; data.n()], &controls).unwrap();
        let total: usize = tree.terminals().iter().map(|&(_, _, n)| n).sum();
        prop_assert_eq!(total, data.n());
        prop_assert!(tree.terminals().iter().all(|&(_, _, n)| n >= minsize));
        let text = serde_json::to_string(&tree).unwrap();
        let back: Tree = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.assign(&data).unwrap(), tree.assign(&data).unwrap());
    }
}
