use rand::seq::{IndexedRandom, SliceRandom};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::LabError;
use crate::budget::Budget;
use crate::constructions::{for_each_subset, route_through_common_neighbours};
use crate::graph::{named, Bits, Graph};
use crate::immersion::{
    immersion_oracle_paths, verify_certificate, EdgePath, ImmersionCertificate, OracleError,
};
use crate::solvers::maximum_clique_mask;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HalfCliqueVerdict {
    /// K_⌈n/2⌉ is immersed; the certificate has been verified.
    Holds {
        certificate: ImmersionCertificate,
        source: &'static str,
    },
    /// Exhaustive search found no immersion of K_⌈n/2⌉.
    Fails,
    Budget,
}

impl HalfCliqueVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            HalfCliqueVerdict::Holds { .. } => "holds",
            HalfCliqueVerdict::Fails => "fails",
            HalfCliqueVerdict::Budget => "budget",
        }
    }

    pub fn certificate(&self) -> Option<&ImmersionCertificate> {
        match self {
            HalfCliqueVerdict::Holds { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// Whether `g` (α ≤ 2) immerses K_⌈n/2⌉.
///
/// Tries a clique, then two-step routing through common neighbours for a few
/// corner choices, then greedy shortest-path routing over the first corner
/// sets in degree order, and finally the exhaustive path oracle, which alone
/// can answer [`HalfCliqueVerdict::Fails`].
pub fn half_clique_check(g: &Graph, budget: Budget) -> Result<HalfCliqueVerdict, LabError> {
    if let Some(triple) = g.independent_triple() {
        return Err(LabError::AlphaAtLeastThree { triple });
    }
    let t = g.n().div_ceil(2);
    let holds = |certificate: ImmersionCertificate, source| {
        let certificate = certificate.normalized();
        let r = verify_certificate(g, &certificate);
        (r.valid && certificate.order() == t).then_some(HalfCliqueVerdict::Holds {
            certificate,
            source,
        })
    };

    let clique: Vec<usize> = match maximum_clique_mask(g, budget) {
        Ok(mask) => Bits(mask).collect(),
        Err(_) => Vec::new(),
    };
    if clique.len() >= t {
        if let Some(v) = holds(ImmersionCertificate::from_clique(&clique[..t]), "clique") {
            return Ok(v);
        }
    }

    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut padded = clique.clone();
    padded.extend(by_degree.iter().filter(|v| !clique.contains(v)));
    let choices: [Vec<usize>; 3] = [
        padded[..t].to_vec(),
        by_degree[..t].to_vec(),
        (0..t).collect(),
    ];
    for corners in &choices {
        let mut corners = corners.clone();
        corners.sort_unstable();
        if let Ok(cert) = route_through_common_neighbours(g, &corners) {
            if let Some(v) = holds(cert, "routing") {
                return Ok(v);
            }
        }
    }

    let mut tried = 0;
    let mut found = None;
    for_each_subset(by_degree.len(), t, |idx| {
        tried += 1;
        let mut corners: Vec<usize> = idx.iter().map(|&i| by_degree[i]).collect();
        corners.sort_unstable();
        found = greedy_paths(g, &corners, None).and_then(|cert| holds(cert, "greedy paths"));
        found.is_none() && tried < GREEDY_CORNER_SETS
    });
    if let Some(v) = found {
        return Ok(v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(g.edge_count() as u64);
    let eligible: Vec<usize> = by_degree
        .iter()
        .copied()
        .filter(|&v| g.degree(v) + 1 >= t)
        .collect();
    if eligible.len() >= t {
        for _ in 0..RANDOM_ATTEMPTS {
            let mut corners: Vec<usize> = eligible.choose_multiple(&mut rng, t).copied().collect();
            corners.sort_unstable();
            if let Some(v) = greedy_paths(g, &corners, Some(&mut rng))
                .and_then(|cert| holds(cert, "greedy paths"))
            {
                return Ok(v);
            }
        }
    }

    match immersion_oracle_paths(g, &named::complete(t), budget) {
        Ok(Some(cert)) => Ok(holds(cert, "path oracle").expect("oracle certificates are valid")),
        Ok(None) => Ok(HalfCliqueVerdict::Fails),
        Err(OracleError::BudgetExceeded | OracleError::HostTooLarge { .. }) => {
            Ok(HalfCliqueVerdict::Budget)
        }
    }
}

const GREEDY_CORNER_SETS: usize = 256;
const RANDOM_ATTEMPTS: usize = 2048;

/// Routes corner pairs one at a time along shortest paths in the edges
/// left over, interiors avoiding corners. Adjacent pairs go first, then the
/// rest by increasing number of common non-corner neighbours, or in random
/// order when `rng` is given.
fn greedy_paths(
    g: &Graph,
    corners: &[usize],
    rng: Option<&mut ChaCha8Rng>,
) -> Option<ImmersionCertificate> {
    let t = corners.len();
    let corner_mask = corners.iter().fold(0u64, |m, &x| m | 1 << x);
    let mut pairs: Vec<(usize, usize)> = (0..t)
        .flat_map(|a| (a + 1..t).map(move |b| (a, b)))
        .collect();
    pairs.sort_by_key(|&(a, b)| {
        let (u, v) = (corners[a], corners[b]);
        let common = (g.neighbor_mask(u) & g.neighbor_mask(v) & !corner_mask).count_ones();
        (!g.has_edge(u, v), common)
    });
    if let Some(rng) = rng {
        let adjacent = pairs.partition_point(|&(a, b)| g.has_edge(corners[a], corners[b]));
        pairs[adjacent..].shuffle(rng);
    }
    let mut adj: Vec<u64> = (0..g.n()).map(|v| g.neighbor_mask(v)).collect();
    let mut paths = Vec::with_capacity(pairs.len());
    for (a, b) in pairs {
        let (u, v) = (corners[a], corners[b]);
        let path = shortest_path(&adj, u, v, !corner_mask | 1 << v)?;
        for w in path.windows(2) {
            adj[w[0]] &= !(1 << w[1]);
            adj[w[1]] &= !(1 << w[0]);
        }
        paths.push(EdgePath { edge: (a, b), path });
    }
    Some(ImmersionCertificate {
        pattern: named::complete(t),
        corners: corners.to_vec(),
        paths,
    })
}

fn shortest_path(adj: &[u64], from: usize, to: usize, allowed: u64) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = 1u64 << from;
    let mut frontier = 1u64 << from;
    while frontier != 0 && seen >> to & 1 == 0 {
        let mut next = 0;
        for x in Bits(frontier) {
            for y in Bits(adj[x] & allowed & !seen & !next) {
                parent[y] = x;
                next |= 1 << y;
            }
        }
        seen |= next;
        // only the target may be entered through a corner
        frontier = next & !(1 << to);
    }
    if seen >> to & 1 == 0 {
        return None;
    }
    let mut path = vec![to];
    while *path.last().expect("non-empty") != from {
        path.push(parent[*path.last().expect("non-empty")]);
    }
    path.reverse();
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        let v = half_clique_check(&complete(5), Budget::UNLIMITED).unwrap();
        assert_eq!(v.certificate().unwrap().order(), 3);
        assert!(matches!(
            v,
            HalfCliqueVerdict::Holds {
                source: "clique",
                ..
            }
        ));

        let g = cycle(5);
        let v = half_clique_check(&g, Budget::UNLIMITED).unwrap();
        assert_eq!(v.label(), "holds");
        assert!(verify_certificate(&g, v.certificate().unwrap()).valid);

        let g = cycle(7).complement();
        let v = half_clique_check(&g, Budget::UNLIMITED).unwrap();
        let cert = v.certificate().unwrap();
        assert_eq!(cert.order(), 4);
        assert!(verify_certificate(&g, cert).valid);
    }

    #[test]
    fn precondition_and_budget() {
        assert!(matches!(
            half_clique_check(&cycle(6), Budget::UNLIMITED),
            Err(LabError::AlphaAtLeastThree { .. })
        ));
        assert_eq!(
            half_clique_check(&Graph::empty(0).unwrap(), Budget::UNLIMITED)
                .unwrap()
                .label(),
            "holds"
        );
    }
}
