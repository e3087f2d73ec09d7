//! The MOB recursive-partitioning loop.
//!
//! Each node fits `γ + θ t` to the offset-adjusted response, tests the score
//! contributions for instability along every covariate, and, if the
//! Bonferroni-adjusted minimum p-value is significant, splits on the
//! selected covariate at the cutpoint minimizing the children's summed RSS.
//! A split is admissible only if both children keep at least `minsize`
//! observations and both treatment arms.

use crate::data::IpdDataset;
use crate::error::{Error, Result};
use crate::fluctest::{self, order_by};
use crate::linmod::{fit_node, ArmStats};
use crate::model::{Intercept, TerminalEffects};
use crate::tree::{Node, Tree};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeControls {
    /// Family-wise significance level of the splitting test.
    pub alpha: f64,
    /// Minimum number of observations per terminal node.
    pub minsize: usize,
    pub max_depth: Option<usize>,
    /// Trimming fraction of the supLM test; raised to `minsize / n` in small nodes.
    pub trim: f64,
}

impl Default for TreeControls {
    fn default() -> Self {
        Self { alpha: 0.05, minsize: 20, max_depth: None, trim: 0.1 }
    }
}

impl TreeControls {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::Config(format!("alpha must lie in (0, 1), got {}", self.alpha)));
        }
        if self.minsize < 2 {
            return Err(Error::Config(format!("minsize must be at least 2, got {}", self.minsize)));
        }
        if !(self.trim > 0.0 && self.trim < 0.5) {
            return Err(Error::Config(format!("trim must lie in (0, 0.5), got {}", self.trim)));
        }
        Ok(())
    }
}

/// Grows a MOB tree on `y - offset`.
pub fn grow_tree(data: &IpdDataset, offset: &[f64], controls: &TreeControls) -> Result<Tree> {
    controls.validate()?;
    if offset.len() != data.n() {
        return Err(Error::DimensionMismatch { what: "offset", expected: data.n(), got: offset.len() });
    }
    let y_adj: Vec<f64> = data.y().iter().zip(offset).map(|(y, o)| y - o).collect();
    let mut grower = Grower { data, y_adj: &y_adj, controls, nodes: Vec::new() };
    grower.grow((0..data.n()).collect(), 0)?;
    Ok(Tree::from_arena(grower.nodes, data.covariate_names().to_vec()))
}

struct Grower<'a> {
    data: &'a IpdDataset,
    y_adj: &'a [f64],
    controls: &'a TreeControls,
    nodes: Vec<Node>,
}

impl Grower<'_> {
    fn grow(&mut self, idx: Vec<usize>, depth: usize) -> Result<usize> {
        let at = self.nodes.len();
        let y: Vec<f64> = idx.iter().map(|&i| self.y_adj[i]).collect();
        let t: Vec<u8> = idx.iter().map(|&i| self.data.trt()[i]).collect();
        let fit = fit_node(&y, &t)?;
        self.nodes.push(Node::Terminal {
            id: 0,
            effects: TerminalEffects { gamma: Intercept::Common(fit.gamma_hat), theta: fit.theta_hat },
            n_obs: idx.len(),
        });

        let n = idx.len();
        let minsize = self.controls.minsize;
        let depth_ok = self.controls.max_depth.is_none_or(|d| depth < d);
        if n < 2 * minsize || !depth_ok {
            return Ok(at);
        }

        let trim = self.controls.trim.max(minsize as f64 / n as f64);
        let columns: Vec<Vec<f64>> =
            self.data.columns().iter().map(|c| idx.iter().map(|&i| c[i]).collect()).collect();
        let views: Vec<&[f64]> = columns.iter().map(|c| c.as_slice()).collect();
        let tests = fluctest::instability_tests(&fit.scores, &views, trim, self.controls.alpha);
        let Some(var) = tests.selected else {
            return Ok(at);
        };
        let (cutpoint, total) = match best_split_point(&y, &t, &columns[var], minsize) {
            Ok(found) => found,
            Err(Error::NoAdmissibleSplit) => return Ok(at),
            Err(e) => return Err(e),
        };
        if total >= fit.rss {
            return Ok(at);
        }

        let (left, right): (Vec<usize>, Vec<usize>) =
            idx.iter().partition(|&&i| self.data.column(var)[i] <= cutpoint);
        let l = self.grow(left, depth + 1)?;
        let r = self.grow(right, depth + 1)?;
        self.nodes[at] = Node::Internal { split_var: var, cutpoint, left: l, right: r };
        Ok(at)
    }
}

/// Exhaustive search over distinct-value boundaries of `x`. Returns the
/// cutpoint (the largest `x` value sent left) and the summed child RSS.
/// Exact ties in the objective go to the smaller cutpoint.
pub fn best_split_point(y_adj: &[f64], trt: &[u8], x: &[f64], minsize: usize) -> Result<(f64, f64)> {
    let n = y_adj.len();
    if trt.len() != n || x.len() != n {
        return Err(Error::DimensionMismatch { what: "split search inputs", expected: n, got: x.len().min(trt.len()) });
    }
    if n < 2 {
        return Err(Error::NoAdmissibleSplit);
    }
    let order = order_by(x);
    // Centering reduces cancellation in the sum-of-squares updates.
    let center = y_adj.iter().sum::<f64>() / n as f64;
    let mut prefix = vec![ArmStats::default(); n + 1];
    for (k, &i) in order.iter().enumerate() {
        prefix[k + 1] = prefix[k];
        prefix[k + 1].push(y_adj[i] - center, trt[i]);
    }
    let mut suffix = vec![ArmStats::default(); n + 1];
    for (k, &i) in order.iter().enumerate().rev() {
        suffix[k] = suffix[k + 1];
        suffix[k].push(y_adj[i] - center, trt[i]);
    }

    let mut best: Option<(f64, f64)> = None;
    for left_n in minsize.max(1)..=n.saturating_sub(minsize.max(1)) {
        if x[order[left_n - 1]] >= x[order[left_n]] {
            continue;
        }
        let (left, right) = (&prefix[left_n], &suffix[left_n]);
        if !left.both_arms() || !right.both_arms() {
            continue;
        }
        debug_assert_eq!(left.n() + right.n(), n);
        let obj = left.rss() + right.rss();
        if best.is_none_or(|(_, b)| obj < b) {
            best = Some((x[order[left_n - 1]], obj));
        }
    }
    best.ok_or(Error::NoAdmissibleSplit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linmod::objective;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    /// Direct enumeration: every threshold among the observed values,
    /// refitting both children from scratch.
    fn brute_force(y: &[f64], t: &[u8], x: &[f64], minsize: usize) -> Option<(f64, f64)> {
        let mut values: Vec<f64> = x.to_vec();
        values.sort_by(f64::total_cmp);
        values.dedup();
        let mut best: Option<(f64, f64)> = None;
        for &c in &values {
            let (mut yl, mut tl, mut yr, mut tr) = (vec![], vec![], vec![], vec![]);
            for i in 0..y.len() {
                if x[i] <= c {
                    yl.push(y[i]);
                    tl.push(t[i]);
                } else {
                    yr.push(y[i]);
                    tr.push(t[i]);
                }
            }
            if yl.len() < minsize || yr.len() < minsize {
                continue;
            }
            let (Ok(fl), Ok(fr)) = (fit_node(&yl, &tl), fit_node(&yr, &tr)) else { continue };
            let obj = objective(&fl) + objective(&fr);
            if best.is_none_or(|(_, b)| obj < b) {
                best = Some((c, obj));
            }
        }
        best
    }

    #[test]
    fn step_function_is_split_exactly() {
        let x: Vec<f64> = (0..60).map(f64::from).collect();
        let t: Vec<u8> = (0..60).map(|i| (i % 2) as u8).collect();
        let y: Vec<f64> = x.iter().map(|&v| if v < 30.0 { 1.0 } else { 5.0 }).collect();
        let (c, obj) = best_split_point(&y, &t, &x, 5).unwrap();
        assert_eq!(c, 29.0);
        assert!(obj.abs() < 1e-9);
    }

    #[test]
    fn matches_brute_force_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let n = 20;
            let x: Vec<f64> = (0..n).map(|_| (rng.random::<f64>() * 8.0).round()).collect();
            let t: Vec<u8> = (0..n).map(|_| rng.random_range(0..2)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
            let expect = brute_force(&y, &t, &x, 3);
            match best_split_point(&y, &t, &x, 3) {
                Ok((c, obj)) => {
                    let (ec, eo) = expect.unwrap();
                    assert_eq!(c, ec);
                    assert!((obj - eo).abs() < 1e-9 * (1.0 + eo));
                }
                Err(Error::NoAdmissibleSplit) => assert!(expect.is_none()),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn single_arm_children_are_inadmissible() {
        // Treated only on the left half: no split keeps both arms in both children
        // except those including some controls on the left.
        let x: Vec<f64> = (0..8).map(f64::from).collect();
        let t = [1, 1, 1, 1, 0, 0, 0, 0];
        let y = [0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 1.0, 1.0];
        assert!(matches!(best_split_point(&y, &t, &x, 2), Err(Error::NoAdmissibleSplit)));
    }

    fn toy_data(n: usize, seed: u64, effect_break: bool) -> IpdDataset {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x1: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 100.0).collect();
        let x2: Vec<f64> = (0..n).map(|_| rng.random::<f64>() * 100.0).collect();
        let t: Vec<u8> = (0..n).map(|_| rng.random_range(0..2)).collect();
        let y: Vec<f64> = (0..n)
            .map(|i| {
                let eff = if effect_break && x1[i] > 50.0 { 4.0 } else { 0.0 };
                eff * f64::from(t[i]) + rng.sample::<f64, _>(StandardNormal)
            })
            .collect();
        let trial = (0..n).map(|i| i % 2 + 1).collect();
        IpdDataset::new(y, t, trial, vec![x1, x2], vec!["x1".into(), "x2".into()]).unwrap()
    }

    #[test]
    fn recovers_single_interaction() {
        let d = toy_data(400, 1, true);
        let tree = grow_tree(&d, &vec![0.0; 400], &TreeControls::default()).unwrap();
        match &tree.nodes()[0] {
            Node::Internal { split_var, cutpoint, .. } => {
                assert_eq!(*split_var, 0);
                assert!((cutpoint - 50.0).abs() < 5.0, "{cutpoint}");
            }
            other => panic!("expected a split, got {other:?}"),
        }
    }

    #[test]
    fn constant_response_gives_single_terminal() {
        let d = toy_data(200, 2, false);
        let d = d.with_response(vec![3.0; 200]).unwrap();
        let tree = grow_tree(&d, &vec![0.0; 200], &TreeControls::default()).unwrap();
        assert_eq!(tree.n_terminals(), 1);
    }

    #[test]
    fn small_root_is_terminal() {
        let d = toy_data(39, 3, true);
        let tree = grow_tree(&d, &vec![0.0; 39], &TreeControls::default()).unwrap();
        assert_eq!(tree.n_terminals(), 1);
    }

    #[test]
    fn terminals_respect_minsize_and_arms() {
        for seed in 0..5 {
            let d = toy_data(500, 10 + seed, true);
            let controls = TreeControls { minsize: 30, ..Default::default() };
            let tree = grow_tree(&d, &vec![0.0; 500], &controls).unwrap();
            let assign = tree.assign(&d).unwrap();
            for (id, _, n_obs) in tree.terminals() {
                let members: Vec<usize> = (0..500).filter(|&i| assign[i] == id).collect();
                assert_eq!(members.len(), n_obs);
                assert!(n_obs >= 30);
                assert!(members.iter().any(|&i| d.trt()[i] == 1) && members.iter().any(|&i| d.trt()[i] == 0));
            }
        }
    }

    #[test]
    fn offset_equivalence_is_bitwise() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let d = toy_data(300, 4, true);
        let offset: Vec<f64> = (0..300).map(|_| rng.random::<f64>() * 3.0).collect();
        let a = grow_tree(&d, &offset, &TreeControls::default()).unwrap();
        let shifted: Vec<f64> = d.y().iter().zip(&offset).map(|(y, o)| y - o).collect();
        let b = grow_tree(&d.with_response(shifted).unwrap(), &vec![0.0; 300], &TreeControls::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn max_depth_limits_growth() {
        let d = toy_data(400, 1, true);
        let controls = TreeControls { max_depth: Some(0), ..Default::default() };
        assert_eq!(grow_tree(&d, &vec![0.0; 400], &controls).unwrap().n_terminals(), 1);
    }
}
