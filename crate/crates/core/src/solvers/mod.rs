//! Exact small-instance solvers.
//!
//! Everything here is exact: searches that can blow up take a [`Budget`]
//! and report [`SolverError::BudgetExceeded`] rather than a guess. Ties are
//! broken towards the lowest vertex index and the lowest colour.

mod chains;
mod clique;
mod coloring;
mod factorization;
mod hamilton;
mod matching;

use thiserror::Error;

use crate::budget::BudgetExceeded;

pub use chains::{chain_between, color_subgraph, dominating_vertices};
pub use clique::{clique_number, independence_number, maximum_clique_mask};
pub use coloring::{
    chromatic_branch_and_bound, chromatic_by_pair_matching, chromatic_exhaustive, chromatic_number,
    greedy_largest_first, ColoringError, VertexColoring,
};
pub use factorization::{one_factorization, EdgeColoring};
pub use hamilton::is_hamiltonian;
pub use matching::{has_perfect_matching, maximum_matching};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("work budget exceeded")]
    BudgetExceeded,
    #[error("graph has {n} vertices, this operation needs at least {min}")]
    TooFewVertices { n: usize, min: usize },
    #[error("colour {color} out of range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },
    #[error("colours must differ (both are {color})")]
    SameColor { color: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("colouring covers {coloring} vertices but the graph has {graph}")]
    SizeMismatch { coloring: usize, graph: usize },
}

impl From<BudgetExceeded> for SolverError {
    fn from(_: BudgetExceeded) -> Self {
        SolverError::BudgetExceeded
    }
}
