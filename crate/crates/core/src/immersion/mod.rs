//! The immersion order: lifts, certificates, the certificate verifier and
//! two independent brute-force oracles.

mod certificate;
pub mod iso;
mod lift;
mod maxclique;
mod oracle_lifts;
mod oracle_paths;
mod verify;

use thiserror::Error;

use crate::budget::BudgetExceeded;

pub use certificate::{CertificateFormatError, EdgePath, ImmersionCertificate};
pub use lift::{apply_lift, LiftError};
pub use maxclique::{edge_count_upper_bound, max_clique_immersion, CliqueImmersion};
pub use oracle_lifts::immersion_oracle_lifts;
pub use oracle_paths::{immersion_oracle_paths, ORACLE_MAX_EDGES};
pub use verify::{verify_certificate, VerificationResult};

/// Non-definitive outcomes of the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("work budget exceeded")]
    BudgetExceeded,
    #[error("host has {edges} edges, the path oracle handles at most {ORACLE_MAX_EDGES}")]
    HostTooLarge { edges: usize },
}

impl From<BudgetExceeded> for OracleError {
    fn from(_: BudgetExceeded) -> Self {
        OracleError::BudgetExceeded
    }
}
