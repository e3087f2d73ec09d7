use thiserror::Error;

use crate::model::LmmFit;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid dataset: {0}")]
    InvalidData(String),

    #[error("dimension mismatch: expected {expected}, got {got} ({what})")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("degenerate node: {0}")]
    DegenerateNode(String),

    #[error("no admissible split")]
    NoAdmissibleSplit,

    #[error("unidentifiable fixed effects: {0}")]
    UnidentifiableFixedEffects(String),

    #[error("convergence failure after {evaluations} evaluations")]
    ConvergenceFailure {
        evaluations: usize,
        best: Box<LmmFit>,
    },

    #[error("subgroup {node} absent in test data")]
    SubgroupAbsent { node: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("malformed tree document: {0}")]
    TreeDocument(String),

    #[error("csv error at {context}: {source}")]
    Csv {
        context: String,
        #[source]
        source: csv::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
