use super::{complement_has_induced_c4, falsified, finish, Construction, ConstructionError};
use crate::budget::Budget;
use crate::graph::{named, Bits, Graph};
use crate::immersion::{EdgePath, ImmersionCertificate};
use crate::solvers::{chromatic_number, dominating_vertices};

const NAME: &str = "c4free";

/// Strong immersion of K_χ in a graph whose complement has no induced C4.
///
/// Corners are the lowest-indexed dominating vertex of each colour. A
/// non-adjacent corner pair u (colour i), v (colour j) is routed u-x-y-v
/// with x the first neighbour of u coloured j and y the first neighbour of
/// v coloured i; xy must be an edge, or {u, v, x, y} would induce C4 in the
/// complement.
pub fn construct_c4free_complement_immersion(
    g: &Graph,
    budget: Budget,
) -> Result<Construction, ConstructionError> {
    if let Some(witness) = complement_has_induced_c4(g) {
        return Err(ConstructionError::ComplementHasC4 { witness });
    }
    let (k, coloring) = chromatic_number(g, budget)?;
    let mut corners = Vec::with_capacity(k);
    for i in 1..=k {
        match dominating_vertices(g, &coloring, i)
            .expect("colour in range")
            .first()
        {
            Some(&u) => corners.push(u),
            None => {
                return Err(falsified(
                    NAME,
                    g,
                    Some(&coloring),
                    format!("colour {i} has no dominating vertex"),
                ))
            }
        }
    }
    let mut paths = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for a in 0..k {
        for b in a + 1..k {
            let (u, v) = (corners[a], corners[b]);
            let path = if g.has_edge(u, v) {
                vec![u, v]
            } else {
                let first = |w: usize, color: usize| {
                    Bits(g.neighbor_mask(w) & coloring.class_mask(color)).next()
                };
                let x = first(u, coloring.color(v)).expect("u is dominating");
                let y = first(v, coloring.color(u)).expect("v is dominating");
                if !g.has_edge(x, y) {
                    return Err(falsified(
                        NAME,
                        g,
                        Some(&coloring),
                        format!("{{{u}, {v}, {x}, {y}}} misses the edge {x}-{y}"),
                    ));
                }
                vec![u, x, y, v]
            };
            paths.push(EdgePath { edge: (a, b), path });
        }
    }
    let cert = ImmersionCertificate {
        pattern: named::complete(k),
        corners,
        paths,
    };
    finish(NAME, g, cert, Some(coloring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn examples() {
        let u = Budget::UNLIMITED;
        assert_eq!(
            construct_c4free_complement_immersion(&complete(5), u)
                .unwrap()
                .certificate
                .order(),
            5
        );
        assert_eq!(
            construct_c4free_complement_immersion(&path(3), u)
                .unwrap()
                .certificate
                .order(),
            2
        );
        let r = construct_c4free_complement_immersion(&triangular_book(6), u).unwrap();
        assert_eq!(r.certificate.order(), 3);
        assert!(r.verification.strong);
        assert_eq!(r.coloring.unwrap().k(), 3);
    }

    #[test]
    fn routes_through_two_interior_vertices() {
        // C5 complement is C5: it has no induced C4, and χ(C5) = 3
        let c = construct_c4free_complement_immersion(&cycle(5), Budget::UNLIMITED).unwrap();
        assert_eq!(c.certificate.order(), 3);
        assert!(c.verification.strong);
    }

    #[test]
    fn precondition() {
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            construct_c4free_complement_immersion(&two_k2, Budget::UNLIMITED),
            Err(ConstructionError::ComplementHasC4 { .. })
        ));
    }
}
