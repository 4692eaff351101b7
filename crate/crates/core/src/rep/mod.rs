//! Finite-dimensional modules: isotypic pieces, induction along minimal coset
//! representatives, the functors `F` and `G`, simple modules, branching and blocks.

mod branch;
mod eigen;
mod functors;
mod module;
mod morita;
mod weights;

pub use branch::{blocks, content, functor_e, functor_f, restrict_branch, BlockLabel, BranchJson, BranchSummand};
pub use eigen::{generalized_kernel, integral_eigenspaces};
pub use functors::{
    forget_characters, induce, isotypic, isotypic_module, isotypic_projector, morita_f, morita_g, simple_dim, simple_labels, simple_module,
    with_characters,
};
pub use module::{FdModule, ModuleJson, Subspace};
pub use morita::{morita_check, predicted_branch_dims, MoritaCheck};
pub use weights::{character_spaces, generator_traces, hom_dim, joint_weights, Invariants, Weight};

use thiserror::Error;

use crate::ayh::AyhError;
use crate::scalars::ScalarError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("eigenvalues q^j account for {found} of {dim} dimensions")]
    NotIntegral { found: usize, dim: usize },
    #[error("relation check failed: {0}")]
    RelationFailure(String),
    #[error("dimension {dim} exceeds the limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AyhError),
}
