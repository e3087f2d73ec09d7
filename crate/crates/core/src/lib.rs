//! Model-based recursive partitioning for subgroup identification in
//! individual-participant-data meta-analysis.
//!
//! Plain MOB grows a tree of treatment-effect models by repeatedly testing
//! the node model's scores for instability along each covariate. The
//! mixed-effects variants (MOB-RI, metaMOB-RI, metaMOB-SI) alternate tree
//! growth, with the trial effects held fixed as an offset, and a linear
//! mixed model fitted on the current partition.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod data;
pub mod design;
pub mod error;
pub mod fluctest;
pub mod glmmtree;
pub mod linmod;
pub mod lmm;
pub mod metrics;
pub mod mobtree;
pub mod model;
pub mod simgen;
mod optim;
pub mod tree;

pub use data::IpdDataset;
pub use error::{Error, Result};
pub use model::{FitWarning, Intercept, LmmFit, ModelSpec, RandomEffects, TerminalEffects, VarianceComponents};
pub use tree::{Node, Tree, TreeDocument};
