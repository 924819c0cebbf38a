use serde::Serialize;

use super::{immersion_oracle_paths, verify_certificate, ImmersionCertificate, OracleError};
use crate::budget::Budget;
use crate::constructions;
use crate::graph::{named, Graph};
use crate::solvers;

/// Result of [`max_clique_immersion`]. When `definitive` is false the search
/// ran out of budget (or hit the oracle's size limit) and `t` is only a
/// lower bound.
#[derive(Debug, Clone, Serialize)]
pub struct CliqueImmersion {
    pub t: usize,
    #[serde(skip)]
    pub certificate: ImmersionCertificate,
    pub definitive: bool,
    /// Which route produced the best certificate.
    pub source: String,
}

/// Largest t with K_t immersed in `g`.
///
/// Constructive lower bounds (maximum clique, then the constructions whose
/// preconditions `g` meets) are tried first; the path oracle then tests
/// t+1, t+2, ... until it proves some K_t absent. Immersion of K_t is
/// monotone in t, so the first definitive "none" settles the answer.
pub fn max_clique_immersion(g: &Graph, budget: Budget) -> CliqueImmersion {
    let mut best = match solvers::maximum_clique_mask(g, budget) {
        Ok(mask) => {
            let clique: Vec<usize> = crate::graph::Bits(mask).collect();
            (
                ImmersionCertificate::from_clique(&clique),
                "clique".to_string(),
            )
        }
        Err(_) => (ImmersionCertificate::from_clique(&[]), "empty".to_string()),
    };
    let mut definitive = true;
    for (cert, source) in constructions::constructive_lower_bounds(g, budget) {
        if cert.order() > best.0.order() {
            best = (cert, source);
        }
    }
    let upper = edge_count_upper_bound(g);
    let mut t = best.0.order() + 1;
    while t <= upper {
        match immersion_oracle_paths(g, &named::complete(t), budget) {
            Ok(Some(cert)) => {
                best = (cert, "path oracle".to_string());
                t += 1;
            }
            Ok(None) => break,
            Err(OracleError::BudgetExceeded | OracleError::HostTooLarge { .. }) => {
                definitive = false;
                break;
            }
        }
    }
    let (certificate, source) = best;
    debug_assert!(verify_certificate(g, &certificate).valid);
    CliqueImmersion {
        t: certificate.order(),
        certificate,
        definitive,
        source,
    }
}

/// Largest t with t(t-1)/2 ≤ |E| and at least t vertices of degree ≥ t-1.
pub fn edge_count_upper_bound(g: &Graph) -> usize {
    let m = g.edge_count();
    (0..=g.n())
        .rev()
        .find(|&t| {
            t * t.saturating_sub(1) / 2 <= m
                && (0..g.n()).filter(|&v| g.degree(v) + 1 >= t).count() >= t
        })
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        let k5 = max_clique_immersion(&complete(5), Budget::UNLIMITED);
        assert_eq!((k5.t, k5.definitive), (5, true));
        let c5 = max_clique_immersion(&cycle(5), Budget::UNLIMITED);
        assert_eq!((c5.t, c5.definitive), (3, true));
        assert!(verify_certificate(&cycle(5), &c5.certificate).valid);
        let g = complete_multipartite(&[2, 2, 2]);
        let m = max_clique_immersion(&g, Budget::UNLIMITED);
        assert_eq!((m.t, m.definitive), (5, true));
        assert!(verify_certificate(&g, &m.certificate).strong);
    }

    #[test]
    fn upper_bound() {
        assert_eq!(
            edge_count_upper_bound(&complete_multipartite(&[2, 2, 2])),
            5
        );
        assert_eq!(edge_count_upper_bound(&cycle(4)), 3);
        assert_eq!(edge_count_upper_bound(&Graph::empty(3).unwrap()), 1);
    }
}
