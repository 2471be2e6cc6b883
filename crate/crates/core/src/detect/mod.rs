//! Brute-force detectors. They are deliberately simple: every reduction in
//! [`crate::reduce`] is checked against them.

mod bitmat;
pub mod format;
mod graph;
mod hyper;
mod intset;

use thiserror::Error;

pub use bitmat::{detect_multichromatic_square, detect_multichromatic_t, detect_square, is_multichromatic_square, is_multichromatic_t, BinaryMatrix};
pub use graph::{detect_triangle, detect_zero_triangle, detect_zero_triangle_graph, Graph, WeightedGraph, WeightedTripartite};
pub use hyper::{detect_hyperclique, Hypergraph};
pub use intset::{detect_foursum, detect_kap, detect_multichromatic_kap, is_kap, IntSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("expected {expected} inputs, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("progression length must be at least 3, got {0}")]
    InvalidLength(usize),
    #[error("matrices must be square and share one shape and offset")]
    ShapeMismatch,
    #[error("value {value} outside [0, {bound}]")]
    OutOfRange { value: i64, bound: i64 },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),
}
