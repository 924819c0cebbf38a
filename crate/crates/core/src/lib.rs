//! Exact toolkit for complete-graph immersions in dense graphs.
//!
//! * [`graph`]: immutable simple graphs, graph6 and edge-list formats.
//! * [`solvers`]: exact χ, α, ω, matchings, Hamiltonicity, 1-factorizations,
//!   colour-class chains and dominating vertices.
//! * [`immersion`]: lifts, immersion certificates, the certificate verifier
//!   and two brute-force immersion oracles.
//! * [`constructions`]: constructive immersions of K_t for complete
//!   multipartite, (5,6)-dense, C4-free-complement and α ≤ 2 graphs.
//! * [`lab`]: α ≤ 2 generators, the minimal-counterexample property battery
//!   and the search harness.
//!
//! Every certificate produced anywhere in the crate is checked by
//! [`immersion::verify_certificate`], which performs no search.

pub mod budget;
pub mod constructions;
pub mod graph;
pub mod immersion;
pub mod lab;
pub mod solvers;

pub use budget::{Budget, BudgetExceeded};
pub use graph::{Graph, GraphError};
pub use immersion::{verify_certificate, ImmersionCertificate, VerificationResult};
