//! Instance generators for the hardness reductions. Each generator is paired
//! with a witness map so tests can push solutions through in both
//! directions.

mod behrend;
mod chromatic;
mod embedding;
mod foursum;
mod hyperclique;
mod identity;
mod square;
mod triangle;

use thiserror::Error;

use crate::detect::DetectError;
use crate::structure::StructureError;

pub use behrend::{behrend_partition, best_behrend_partition, BehrendPartition};
pub use chromatic::{colorize_kap, monochromatize_kap, MonoApInstance};
pub use embedding::{subexpression_embedding, Embedding};
pub use foursum::{fourap_to_foursum, FourSumInstance};
pub use hyperclique::{ap_to_hyperclique, ruler_base, ruler_set, ruler_vector, HypercliqueInstance};
pub use identity::{family_expression, square_to_identity, t_to_identity, Family, IdentityInstance};
pub use square::{
    fourap_to_square, fourap_to_t, multi_to_mono_square, multi_to_mono_witness, squarefree_matrices, squarefree_window, MonoSquareInstance,
    SquareReduction, TReduction, DEFAULT_WINDOW,
};
pub use triangle::{
    triangle_to_distributivity, zero_triangle_to_constant_identity, zero_triangle_to_counting, ZeroTriangleInstance,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReduceError {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Detect(#[from] DetectError),
    #[error("edge weight {weight} outside [-{bound}, {bound}]")]
    WeightOutOfRange { weight: i64, bound: i64 },
    #[error("matrices must share one square shape and offset")]
    ShapeMismatch,
    #[error("expected {expected} inputs, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("structure lacks the constant `{0}`")]
    MissingConstant(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
