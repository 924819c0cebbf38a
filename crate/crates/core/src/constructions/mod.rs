//! Constructive immersions of complete graphs. Every constructor returns a
//! certificate that has already passed [`verify_certificate`] as a strong
//! immersion; anything else is reported as an error carrying a diagnostic
//! bundle, never as output.

mod c4free;
mod dense56;
mod density;
mod multipartite;
mod third;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{serialize_graph6, Graph};
use crate::immersion::{verify_certificate, ImmersionCertificate, VerificationResult};
use crate::solvers::VertexColoring;

pub use c4free::construct_c4free_complement_immersion;
pub use dense56::construct_dense56_immersion;
pub(crate) use density::for_each_subset;
pub use density::{complement_has_induced_c4, is_k_s_dense, DensityWitness};
pub use multipartite::{
    construct_multipartite_immersion, multipartite_classes, multipartite_immersion_on,
    multipartite_target_size,
};
pub use third::{
    construct_third_immersion, route_through_common_neighbours, ThirdOptions, ThirdOutcome,
};

/// Everything needed to reproduce a failed construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Diagnostic {
    pub construction: &'static str,
    pub graph6: String,
    pub coloring: Option<Vec<usize>>,
    pub detail: String,
}

impl Diagnostic {
    pub(crate) fn new(
        construction: &'static str,
        g: &Graph,
        coloring: Option<&VertexColoring>,
        detail: impl Into<String>,
    ) -> Self {
        Diagnostic {
            construction,
            graph6: serialize_graph6(g).unwrap_or_default(),
            coloring: coloring.map(|c| c.colors().to_vec()),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not (5,6)-dense: vertices {violating_set:?} induce fewer than 6 edges")]
    NotDense { violating_set: Vec<usize> },
    #[error("complement has an induced C4 on {witness:?}")]
    ComplementHasC4 { witness: [usize; 4] },
    #[error("independence number is at least 3: {triple:?} is independent")]
    AlphaAtLeastThree { triple: [usize; 3] },
    #[error("work budget exceeded")]
    BudgetExceeded,
    /// The construction's guarantee failed on this input. This would
    /// contradict the guarantee of the construction and is preserved for
    /// inspection.
    #[error("construction failed on {}: {}", .0.graph6, .0.detail)]
    Falsification(Box<Diagnostic>),
}

impl From<BudgetExceeded> for ConstructionError {
    fn from(_: BudgetExceeded) -> Self {
        ConstructionError::BudgetExceeded
    }
}

/// A verified immersion certificate plus the colouring it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub certificate: ImmersionCertificate,
    pub coloring: Option<VertexColoring>,
    pub verification: VerificationResult,
}

pub(crate) fn finish(
    name: &'static str,
    g: &Graph,
    certificate: ImmersionCertificate,
    coloring: Option<VertexColoring>,
) -> Result<Construction, ConstructionError> {
    let certificate = certificate.normalized();
    let verification = verify_certificate(g, &certificate);
    if !verification.strong {
        let detail = match &verification.violation {
            Some(v) => format!("emitted an invalid certificate: {v}"),
            None => "emitted a certificate that is not strong".to_string(),
        };
        return Err(ConstructionError::Falsification(Box::new(Diagnostic::new(
            name,
            g,
            coloring.as_ref(),
            detail,
        ))));
    }
    Ok(Construction {
        certificate,
        coloring,
        verification,
    })
}

pub(crate) fn falsified(
    name: &'static str,
    g: &Graph,
    coloring: Option<&VertexColoring>,
    detail: impl Into<String>,
) -> ConstructionError {
    ConstructionError::Falsification(Box::new(Diagnostic::new(name, g, coloring, detail)))
}

/// Certificates from every construction whose precondition `g` satisfies,
/// labelled by construction name.
pub fn constructive_lower_bounds(g: &Graph, budget: Budget) -> Vec<(ImmersionCertificate, String)> {
    let mut out = Vec::new();
    if let Ok(outcome) = construct_third_immersion(g, &ThirdOptions::default()) {
        out.push((outcome.into_certificate(), "third".to_string()));
    }
    if complement_has_induced_c4(g).is_none() {
        if let Ok(c) = construct_c4free_complement_immersion(g, budget) {
            out.push((c.certificate, "c4free".to_string()));
        }
    }
    if g.n() <= 16 && is_k_s_dense(g, 5, 6).dense {
        if let Ok(c) = construct_dense56_immersion(g, budget) {
            out.push((c.certificate, "dense56".to_string()));
        }
    }
    if let Some(classes) = multipartite_classes(g) {
        if let Ok(c) = multipartite_immersion_on(g, &classes) {
            out.push((c.certificate, "multipartite".to_string()));
        }
    }
    out
}
