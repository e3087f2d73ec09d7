//! Binary partition trees with per-terminal treatment-effect models.
//!
//! Nodes live in an arena with the root at index 0. Subjects go left iff
//! `x[split_var] <= cutpoint`. Terminal ids run `1..=J` in left-to-right
//! depth-first order.

use serde::{Deserialize, Serialize};

use crate::data::IpdDataset;
use crate::error::{Error, Result};
use crate::model::{Intercept, TerminalEffects};

#[derive(Debug, Clone, PartialEq)]
pub enum Node {
    Internal { split_var: usize, cutpoint: f64, left: usize, right: usize },
    Terminal { id: usize, effects: TerminalEffects, n_obs: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "TreeRepr", try_from = "TreeRepr")]
pub struct Tree {
    nodes: Vec<Node>,
    covariate_names: Vec<String>,
}

impl Tree {
    pub fn single(effects: TerminalEffects, n_obs: usize, covariate_names: Vec<String>) -> Self {
        Self { nodes: vec![Node::Terminal { id: 1, effects, n_obs }], covariate_names }
    }

    /// Assembles a tree from an arena; ids are reassigned depth-first.
    pub(crate) fn from_arena(nodes: Vec<Node>, covariate_names: Vec<String>) -> Self {
        let mut tree = Self { nodes, covariate_names };
        tree.renumber();
        tree
    }

    fn renumber(&mut self) {
        let order = self.terminal_indices();
        for (pos, idx) in order.into_iter().enumerate() {
            if let Node::Terminal { id, .. } = &mut self.nodes[idx] {
                *id = pos + 1;
            }
        }
    }

    /// Arena indices of terminals in depth-first, left-to-right order.
    fn terminal_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        while let Some(i) = stack.pop() {
            match &self.nodes[i] {
                Node::Internal { left, right, .. } => {
                    stack.push(*right);
                    stack.push(*left);
                }
                Node::Terminal { .. } => out.push(i),
            }
        }
        out
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn covariate_names(&self) -> &[String] {
        &self.covariate_names
    }

    pub fn n_terminals(&self) -> usize {
        self.nodes.iter().filter(|n| matches!(n, Node::Terminal { .. })).count()
    }

    pub fn n_splits(&self) -> usize {
        self.nodes.len() - self.n_terminals()
    }

    /// `(id, effects, n_obs)` for each terminal in id order.
    pub fn terminals(&self) -> Vec<(usize, &TerminalEffects, usize)> {
        self.terminal_indices()
            .into_iter()
            .map(|i| match &self.nodes[i] {
                Node::Terminal { id, effects, n_obs } => (*id, effects, *n_obs),
                Node::Internal { .. } => unreachable!(),
            })
            .collect()
    }

    /// Routes one covariate row to its terminal id.
    pub fn predict_node(&self, x_row: &[f64]) -> Result<usize> {
        if x_row.len() != self.covariate_names.len() {
            return Err(Error::DimensionMismatch {
                what: "covariate row",
                expected: self.covariate_names.len(),
                got: x_row.len(),
            });
        }
        Ok(self.route(|j| x_row[j]))
    }

    fn route(&self, x: impl Fn(usize) -> f64) -> usize {
        let mut i = 0;
        loop {
            match &self.nodes[i] {
                Node::Internal { split_var, cutpoint, left, right } => {
                    i = if x(*split_var) <= *cutpoint { *left } else { *right };
                }
                Node::Terminal { id, .. } => return *id,
            }
        }
    }

    /// Terminal id for every subject of `data`.
    pub fn assign(&self, data: &IpdDataset) -> Result<Vec<usize>> {
        if data.p() != self.covariate_names.len() {
            return Err(Error::DimensionMismatch {
                what: "number of covariates",
                expected: self.covariate_names.len(),
                got: data.p(),
            });
        }
        Ok((0..data.n()).map(|i| self.route(|j| data.column(j)[i])).collect())
    }

    /// True when both trees split on the same variables at the same
    /// cutpoints in the same positions; terminal parameters are ignored.
    pub fn same_partition(&self, other: &Tree) -> bool {
        fn walk(a: &Tree, ia: usize, b: &Tree, ib: usize) -> bool {
            match (&a.nodes[ia], &b.nodes[ib]) {
                (
                    Node::Internal { split_var: va, cutpoint: ca, left: la, right: ra },
                    Node::Internal { split_var: vb, cutpoint: cb, left: lb, right: rb },
                ) => va == vb && ca == cb && walk(a, *la, b, *lb) && walk(a, *ra, b, *rb),
                (Node::Terminal { .. }, Node::Terminal { .. }) => true,
                _ => false,
            }
        }
        walk(self, 0, other, 0)
    }

    /// Replaces terminal parameters, given in terminal-id order.
    pub fn set_terminal_effects(&mut self, effects: Vec<TerminalEffects>) -> Result<()> {
        let idx = self.terminal_indices();
        if effects.len() != idx.len() {
            return Err(Error::DimensionMismatch {
                what: "terminal effects",
                expected: idx.len(),
                got: effects.len(),
            });
        }
        for (i, e) in idx.into_iter().zip(effects) {
            if let Node::Terminal { effects, .. } = &mut self.nodes[i] {
                *effects = e;
            }
        }
        Ok(())
    }

    pub fn to_document(&self) -> TreeDocument {
        fn build(t: &Tree, i: usize) -> TreeDocument {
            match &t.nodes[i] {
                Node::Internal { split_var, cutpoint, left, right } => TreeDocument::Split {
                    split: t.covariate_names[*split_var].clone(),
                    cutpoint: *cutpoint,
                    left: Box::new(build(t, *left)),
                    right: Box::new(build(t, *right)),
                },
                Node::Terminal { id, effects, n_obs } => TreeDocument::Terminal {
                    node: *id,
                    n: *n_obs,
                    gamma: effects.gamma.clone(),
                    theta: effects.theta,
                },
            }
        }
        build(self, 0)
    }

    /// Rebuilds a tree from its nested document. Split variables are looked
    /// up by name in `covariate_names`; terminal ids must be in depth-first order.
    pub fn from_document(doc: &TreeDocument, covariate_names: Vec<String>) -> Result<Self> {
        fn push(doc: &TreeDocument, names: &[String], nodes: &mut Vec<Node>) -> Result<usize> {
            let at = nodes.len();
            match doc {
                TreeDocument::Split { split, cutpoint, left, right } => {
                    let split_var = names
                        .iter()
                        .position(|n| n == split)
                        .ok_or_else(|| Error::TreeDocument(format!("unknown split variable `{split}`")))?;
                    if !cutpoint.is_finite() {
                        return Err(Error::TreeDocument("non-finite cutpoint".into()));
                    }
                    nodes.push(Node::Internal { split_var, cutpoint: *cutpoint, left: 0, right: 0 });
                    let l = push(left, names, nodes)?;
                    let r = push(right, names, nodes)?;
                    nodes[at] = Node::Internal { split_var, cutpoint: *cutpoint, left: l, right: r };
                }
                TreeDocument::Terminal { node, n, gamma, theta } => {
                    nodes.push(Node::Terminal {
                        id: *node,
                        effects: TerminalEffects { gamma: gamma.clone(), theta: *theta },
                        n_obs: *n,
                    });
                }
            }
            Ok(at)
        }
        let mut nodes = Vec::new();
        push(doc, &covariate_names, &mut nodes)?;
        let tree = Self { nodes, covariate_names };
        for (pos, (id, _, _)) in tree.terminals().into_iter().enumerate() {
            if id != pos + 1 {
                return Err(Error::TreeDocument(format!(
                    "terminal ids must be 1..J in depth-first order; found {id} at position {}",
                    pos + 1
                )));
            }
        }
        Ok(tree)
    }
}

/// Nested, name-based tree representation used for serialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TreeDocument {
    Split {
        split: String,
        cutpoint: f64,
        left: Box<TreeDocument>,
        right: Box<TreeDocument>,
    },
    Terminal {
        node: usize,
        n: usize,
        gamma: Intercept,
        theta: f64,
    },
}

#[derive(Serialize, Deserialize)]
struct TreeRepr {
    covariates: Vec<String>,
    root: TreeDocument,
}

impl From<Tree> for TreeRepr {
    fn from(t: Tree) -> Self {
        TreeRepr { root: t.to_document(), covariates: t.covariate_names }
    }
}

impl TryFrom<TreeRepr> for Tree {
    type Error = Error;

    fn try_from(r: TreeRepr) -> Result<Self> {
        Tree::from_document(&r.root, r.covariates)
    }
}

/// The four-subgroup reference tree used by the simulation scenarios:
/// root `X2 <= 30`, then `X1 <= 17` on the left and `X5 <= 63` on the right.
pub fn reference_tree(covariate_names: Vec<String>) -> Result<Tree> {
    let leaf = |node, gamma, theta| TreeDocument::Terminal { node, n: 0, gamma: Intercept::Common(gamma), theta };
    let doc = TreeDocument::Split {
        split: "X2".into(),
        cutpoint: 30.0,
        left: Box::new(TreeDocument::Split {
            split: "X1".into(),
            cutpoint: 17.0,
            left: Box::new(leaf(1, 17.5, -5.0)),
            right: Box::new(leaf(2, 30.0, 0.0)),
        }),
        right: Box::new(TreeDocument::Split {
            split: "X5".into(),
            cutpoint: 63.0,
            left: Box::new(leaf(3, 30.0, 0.0)),
            right: Box::new(leaf(4, 42.5, 5.0)),
        }),
    };
    Tree::from_document(&doc, covariate_names)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(p: usize) -> Vec<String> {
        (1..=p).map(|j| format!("X{j}")).collect()
    }

    fn fig1() -> Tree {
        reference_tree(names(15)).unwrap()
    }

    fn row(x1: f64, x2: f64, x5: f64) -> Vec<f64> {
        let mut r = vec![0.0; 15];
        r[0] = x1;
        r[1] = x2;
        r[4] = x5;
        r
    }

    #[test]
    fn routes_reference_tree() {
        let t = fig1();
        assert_eq!(t.predict_node(&row(10.0, 20.0, 0.0)).unwrap(), 1);
        assert_eq!(t.predict_node(&row(20.0, 20.0, 0.0)).unwrap(), 2);
        assert_eq!(t.predict_node(&row(0.0, 40.0, 60.0)).unwrap(), 3);
        assert_eq!(t.predict_node(&row(0.0, 40.0, 70.0)).unwrap(), 4);
        let (_, e, _) = t.terminals()[0];
        assert_eq!((e.gamma.average(), e.theta), (17.5, -5.0));
    }

    #[test]
    fn boundary_goes_left() {
        let t = fig1();
        assert_eq!(t.predict_node(&row(17.0, 30.0, 100.0)).unwrap(), 1);
        assert_eq!(t.predict_node(&row(17.5, 30.0, 100.0)).unwrap(), 2);
    }

    #[test]
    fn single_terminal_routes_everything_to_one() {
        let t = Tree::single(TerminalEffects { gamma: Intercept::Common(0.0), theta: 0.0 }, 10, names(2));
        assert_eq!(t.predict_node(&[1e9, -1e9]).unwrap(), 1);
        assert_eq!(t.n_terminals(), 1);
    }

    #[test]
    fn rejects_wrong_row_length() {
        assert!(matches!(fig1().predict_node(&[1.0, 2.0]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn document_round_trip_via_json() {
        let t = fig1();
        let json = serde_json::to_string(&t).unwrap();
        let back: Tree = serde_json::from_str(&json).unwrap();
        assert_eq!(t, back);
        assert!(json.contains("\"split\":\"X2\""));
    }

    #[test]
    fn unknown_split_variable_is_rejected() {
        let doc = fig1().to_document();
        assert!(Tree::from_document(&doc, names(3)).is_err());
    }

    #[test]
    fn partition_comparison_ignores_parameters() {
        let a = fig1();
        let mut b = fig1();
        let eff = vec![TerminalEffects { gamma: Intercept::Common(1.0), theta: 2.0 }; 4];
        b.set_terminal_effects(eff).unwrap();
        assert!(a.same_partition(&b));
        let single = Tree::single(TerminalEffects { gamma: Intercept::Common(0.0), theta: 0.0 }, 1, names(15));
        assert!(!a.same_partition(&single));
    }
}
