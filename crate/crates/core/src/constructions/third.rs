use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{falsified, finish, Construction, ConstructionError};
use crate::graph::{named, Bits, Graph};
use crate::immersion::{EdgePath, ImmersionCertificate};
use crate::solvers::chromatic_by_pair_matching;

const NAME: &str = "third";

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ThirdOptions {
    /// Shuffle the vertex order before taking the first ⌈n/3⌉ as corners.
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ThirdOutcome {
    /// A low-degree vertex whose non-neighbourhood holds a clique of size ⌈n/3⌉.
    Clique {
        vertex: usize,
        clique: Vec<usize>,
    },
    Routed(Construction),
}

impl ThirdOutcome {
    pub fn order(&self) -> usize {
        match self {
            ThirdOutcome::Clique { clique, .. } => clique.len(),
            ThirdOutcome::Routed(c) => c.certificate.order(),
        }
    }

    pub fn into_certificate(self) -> ImmersionCertificate {
        match self {
            ThirdOutcome::Clique { clique, .. } => ImmersionCertificate::from_clique(&clique),
            ThirdOutcome::Routed(c) => c.certificate,
        }
    }
}

/// K_⌈n/3⌉ in a graph with α ≤ 2.
///
/// If some vertex has degree below ⌊2n/3⌋ its non-neighbourhood is a clique
/// of at least ⌈n/3⌉ vertices. Otherwise the first ⌈n/3⌉ vertices U are the
/// corners and every non-adjacent corner pair u, v is routed u-z-v through
/// the lowest z ∈ N(u) ∩ N(v) outside U not yet used by a path at u or at v.
pub fn construct_third_immersion(
    g: &Graph,
    options: &ThirdOptions,
) -> Result<ThirdOutcome, ConstructionError> {
    if let Some(triple) = g.independent_triple() {
        return Err(ConstructionError::AlphaAtLeastThree { triple });
    }
    let n = g.n();
    let t = n.div_ceil(3);
    let degree_floor = 2 * n / 3;
    if let Some(v) = (0..n).find(|&v| g.degree(v) < degree_floor) {
        let clique: Vec<usize> = Bits(g.non_neighbor_mask(v)).take(t).collect();
        let mask = clique.iter().fold(0u64, |m, &x| m | 1 << x);
        if clique.len() < t || !g.is_clique(mask) {
            return Err(falsified(
                NAME,
                g,
                None,
                format!("non-neighbourhood of {v} is not a clique of size {t}"),
            ));
        }
        return Ok(ThirdOutcome::Clique { vertex: v, clique });
    }
    let mut order: Vec<usize> = (0..n).collect();
    if let Some(seed) = options.seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    let corners = &order[..t];
    let corner_mask = corners.iter().fold(0u64, |m, &x| m | 1 << x);
    let w = g.vertex_mask() & !corner_mask;
    for (a, &u) in corners.iter().enumerate() {
        for &v in &corners[a + 1..] {
            if !g.has_edge(u, v) && (g.neighbor_mask(u) | g.neighbor_mask(v)) & w != w {
                return Err(falsified(
                    NAME,
                    g,
                    None,
                    format!("N_W({u}) ∪ N_W({v}) misses part of W"),
                ));
            }
        }
    }
    let coloring = chromatic_by_pair_matching(g);
    match route_through_common_neighbours(g, corners) {
        Ok(cert) => Ok(ThirdOutcome::Routed(finish(NAME, g, cert, coloring)?)),
        Err((u, v)) => Err(falsified(
            NAME,
            g,
            coloring.as_ref(),
            format!("greedy routing exhausted at corner pair ({u}, {v})"),
        )),
    }
}

/// Joins every pair of `corners` by an edge or by a path u-z-v through a
/// non-corner z, greedily: pairs in lexicographic order of corner position,
/// z the lowest common neighbour not yet used on a path at u or at v.
/// Returns the first corner pair that could not be routed on failure.
pub fn route_through_common_neighbours(
    g: &Graph,
    corners: &[usize],
) -> Result<ImmersionCertificate, (usize, usize)> {
    let corner_mask = corners.iter().fold(0u64, |m, &x| m | 1 << x);
    let w = g.vertex_mask() & !corner_mask;
    // used[x]: non-corners already on a path with endpoint x
    let mut used = vec![0u64; g.n()];
    let t = corners.len();
    let mut paths = Vec::with_capacity(t * t.saturating_sub(1) / 2);
    for a in 0..t {
        for b in a + 1..t {
            let (u, v) = (corners[a], corners[b]);
            let path = if g.has_edge(u, v) {
                vec![u, v]
            } else {
                let free = g.neighbor_mask(u) & g.neighbor_mask(v) & w & !used[u] & !used[v];
                let Some(z) = Bits(free).next() else {
                    return Err((u, v));
                };
                used[u] |= 1 << z;
                used[v] |= 1 << z;
                vec![u, z, v]
            };
            paths.push(EdgePath { edge: (a, b), path });
        }
    }
    Ok(ImmersionCertificate {
        pattern: named::complete(t),
        corners: corners.to_vec(),
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::immersion::verify_certificate;

    #[test]
    fn low_degree_branch() {
        match construct_third_immersion(&cycle(5), &ThirdOptions::default()).unwrap() {
            ThirdOutcome::Clique { vertex, clique } => {
                assert_eq!(vertex, 0);
                assert_eq!(clique, vec![2, 3]);
            }
            other => panic!("expected clique branch, got {other:?}"),
        }
    }

    #[test]
    fn routing_branch() {
        match construct_third_immersion(&complete(9), &ThirdOptions::default()).unwrap() {
            ThirdOutcome::Routed(c) => {
                assert_eq!(c.certificate.order(), 3);
                assert!(c.certificate.paths.iter().all(|p| p.path.len() == 2));
            }
            other => panic!("expected routing, got {other:?}"),
        }
        let g = cycle(7).complement();
        match construct_third_immersion(&g, &ThirdOptions::default()).unwrap() {
            ThirdOutcome::Routed(c) => {
                assert_eq!(c.certificate.order(), 3);
                assert!(verify_certificate(&g, &c.certificate).strong);
                // corners 0,1,2: 0-2 adjacent in the complement of C7, 0-1 and 1-2 are not
                assert_eq!(
                    c.certificate
                        .paths
                        .iter()
                        .filter(|p| p.path.len() == 3)
                        .count(),
                    2
                );
            }
            other => panic!("expected routing, got {other:?}"),
        }
    }

    #[test]
    fn seeded_corner_choice() {
        let g = cycle(7).complement();
        let a = construct_third_immersion(&g, &ThirdOptions { seed: Some(3) }).unwrap();
        let b = construct_third_immersion(&g, &ThirdOptions { seed: Some(3) }).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.order(), 3);
    }

    #[test]
    fn precondition() {
        assert_eq!(
            construct_third_immersion(&cycle(6), &ThirdOptions::default()),
            Err(ConstructionError::AlphaAtLeastThree { triple: [0, 2, 4] })
        );
        assert_eq!(
            construct_third_immersion(&Graph::empty(0).unwrap(), &ThirdOptions::default())
                .unwrap()
                .order(),
            0
        );
        assert_eq!(
            construct_third_immersion(&Graph::empty(1).unwrap(), &ThirdOptions::default())
                .unwrap()
                .order(),
            1
        );
    }
}
