//! Fixed- and random-effects design matrices for a given node assignment.
//!
//! Fixed columns: per-node intercepts (per node and trial under `M3`, laid
//! out node-major) followed by per-node treatment columns. Random columns:
//! trial indicators `1..K` for the intercept, then trial-by-treatment
//! indicators `K+1..2K` for the slope.

use nalgebra::DMatrix;

use crate::data::IpdDataset;
use crate::error::{Error, Result};
use crate::model::ModelSpec;

/// Which variance component a random-effects column belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomTerm {
    Intercept,
    Slope,
}

#[derive(Debug, Clone)]
pub struct Design {
    pub spec: ModelSpec,
    pub n_terminals: usize,
    pub n_trials: usize,
    /// Fixed-effects design `X*`, N × q.
    pub x: DMatrix<f64>,
    /// Random-effects design `Z`, N × r.
    pub z: DMatrix<f64>,
    pub z_terms: Vec<RandomTerm>,
}

impl Design {
    /// A design not tied to a tree: arbitrary `X*`, and `Z` whose columns of
    /// each term are ordered by trial. `n_terminals` is 0, so fits built on it
    /// report coefficients only.
    pub fn custom(x: DMatrix<f64>, z: DMatrix<f64>, z_terms: Vec<RandomTerm>, n_trials: usize) -> Result<Self> {
        if z.nrows() != x.nrows() || z.ncols() != z_terms.len() {
            return Err(Error::DimensionMismatch { what: "random-effects design", expected: x.nrows(), got: z.nrows() });
        }
        let has = |t| z_terms.contains(&t);
        let spec = match (has(RandomTerm::Intercept), has(RandomTerm::Slope)) {
            (false, false) => ModelSpec::M0,
            (true, false) => ModelSpec::M1,
            (true, true) => ModelSpec::M2,
            (false, true) => ModelSpec::M3,
        };
        Ok(Design { spec, n_terminals: 0, n_trials, x, z, z_terms })
    }

    pub fn n_intercept_columns(&self) -> usize {
        if self.spec.stratified_intercepts() {
            self.n_terminals * self.n_trials
        } else {
            self.n_terminals
        }
    }

    /// Fixed column holding the intercept of `node` (and `trial` under M3), both 1-based.
    pub fn intercept_column(&self, node: usize, trial: usize) -> usize {
        if self.spec.stratified_intercepts() {
            (node - 1) * self.n_trials + (trial - 1)
        } else {
            node - 1
        }
    }

    pub fn treatment_column(&self, node: usize) -> usize {
        self.n_intercept_columns() + node - 1
    }
}

/// Builds `X*` and `Z` for subjects assigned to terminal nodes `1..=J`.
pub fn design_vectors(data: &IpdDataset, assignment: &[usize], spec: ModelSpec) -> Result<Design> {
    let n = data.n();
    if assignment.len() != n {
        return Err(Error::DimensionMismatch { what: "node assignment", expected: n, got: assignment.len() });
    }
    if assignment.contains(&0) {
        return Err(Error::InvalidData("node ids are 1-based".into()));
    }
    let n_terminals = assignment.iter().copied().max().unwrap_or(1);
    let k = data.n_trials();

    let mut z_terms = Vec::new();
    if spec.has_random_intercept() {
        z_terms.extend(std::iter::repeat_n(RandomTerm::Intercept, k));
    }
    if spec.has_random_slope() {
        z_terms.extend(std::iter::repeat_n(RandomTerm::Slope, k));
    }

    let mut design = Design {
        spec,
        n_terminals,
        n_trials: k,
        x: DMatrix::zeros(n, 0),
        z: DMatrix::zeros(n, z_terms.len()),
        z_terms,
    };
    let q = design.n_intercept_columns() + n_terminals;
    let mut x = DMatrix::zeros(n, q);
    let slope_offset = if spec.has_random_intercept() { k } else { 0 };
    for i in 0..n {
        let (node, trial, t) = (assignment[i], data.trial()[i], f64::from(data.trt()[i]));
        x[(i, design.intercept_column(node, trial))] = 1.0;
        x[(i, design.treatment_column(node))] = t;
        if spec.has_random_intercept() {
            design.z[(i, trial - 1)] = 1.0;
        }
        if spec.has_random_slope() {
            design.z[(i, slope_offset + trial - 1)] = t;
        }
    }
    design.x = x;
    Ok(design)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data() -> IpdDataset {
        // Trials 1..3, both arms present.
        IpdDataset::new(
            vec![0.0; 6],
            vec![0, 1, 0, 1, 0, 1],
            vec![1, 1, 2, 2, 3, 3],
            vec![vec![0.0; 6]],
            vec!["x".into()],
        )
        .unwrap()
    }

    #[test]
    fn m2_random_row_marks_trial_and_trial_by_treatment() {
        let d = data();
        let des = design_vectors(&d, &[1; 6], ModelSpec::M2).unwrap();
        // Subject 3 (0-based) is trial 2, treated.
        let row: Vec<f64> = des.z.row(3).iter().copied().collect();
        assert_eq!(row, vec![0.0, 1.0, 0.0, 0.0, 1.0, 0.0]);
        let ctrl: Vec<f64> = des.z.row(2).iter().copied().collect();
        assert_eq!(ctrl, vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn m0_has_no_random_columns() {
        let des = design_vectors(&data(), &[1, 2, 1, 2, 1, 2], ModelSpec::M0).unwrap();
        assert_eq!(des.z.ncols(), 0);
        assert_eq!(des.x.ncols(), 4);
    }

    #[test]
    fn m3_column_count_matches_enumeration() {
        let d = data();
        let assign = [1, 2, 1, 2, 2, 1];
        let des = design_vectors(&d, &assign, ModelSpec::M3).unwrap();
        // Enumerate the parameterization: one intercept per (node, trial) pair, one slope per node.
        let mut labels = Vec::new();
        for j in 1..=2 {
            for k in 1..=3 {
                labels.push(format!("gamma_{j}{k}"));
            }
        }
        for j in 1..=2 {
            labels.push(format!("theta_{j}"));
        }
        assert_eq!(des.x.ncols(), labels.len());
        assert_eq!(des.x.ncols(), 2 * 3 + 2);
        assert_eq!(des.z.ncols(), 3);
        // Each row has exactly one intercept indicator, in its (node, trial) slot.
        for i in 0..6 {
            let col = des.intercept_column(assign[i], d.trial()[i]);
            assert_eq!(des.x[(i, col)], 1.0);
            let s: f64 = (0..des.n_intercept_columns()).map(|c| des.x[(i, c)]).sum();
            assert_eq!(s, 1.0);
        }
    }

    #[test]
    fn intercept_block_rows_sum_to_one() {
        let des = design_vectors(&data(), &[1; 6], ModelSpec::M1).unwrap();
        for i in 0..6 {
            assert_eq!(des.z.row(i).sum(), 1.0);
        }
    }
}
