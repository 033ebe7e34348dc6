//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum TensorError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("backward target is not a scalar: {0}x{1}")]
    NotScalar(usize, usize),
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("{path}:{line}: parse error: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error("consistency error: {0}")]
    Consistency(String),
    #[error("unknown node: type {ty} id {id}")]
    UnknownNode { ty: usize, id: usize },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("attention weights requested from a non-attention layer")]
    NotAttentionLayer,
    #[error("slot {0} has no incoming messages and self-messages are disabled")]
    EmptyNeighborhood(usize),
    #[error("mask plan inconsistent with subgraph: {0}")]
    InconsistentPlan(String),
    #[error("checkpoint incompatible with model: {0:?}")]
    IncompatibleCheckpoint(Vec<String>),
    #[error("checkpoint parse error at line {line}: {msg}")]
    CheckpointParse { line: usize, msg: String },
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Error)]
pub enum EvalError {
    #[error("empty evaluation set")]
    EmptyEval,
    #[error("empty split: {0}")]
    EmptySplit(String),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
