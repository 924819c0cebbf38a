//! Immersion by definition: breadth-first search over every graph reachable
//! from the host through lifts and edge deletions, looking for one that
//! contains the pattern as a subgraph. Vertex deletion needs no move of its
//! own since subgraph containment already ignores surplus vertices.
//!
//! States are deduplicated up to isomorphism: buckets keyed by vertex count,
//! edge count and degree sequence, exact isomorphism test inside a bucket.

use std::collections::{HashMap, VecDeque};

use super::iso::{contains_subgraph, is_isomorphic};
use super::OracleError;
use crate::budget::Budget;
use crate::graph::{invariant_key, Bits, Graph};

pub fn immersion_oracle_lifts(g: &Graph, h: &Graph, budget: Budget) -> Result<bool, OracleError> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(false);
    }
    let mut meter = budget.meter();
    let floor = h.edge_count();
    let mut seen: HashMap<(usize, usize, Vec<usize>), Vec<Graph>> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.entry(invariant_key(g)).or_default().push(g.clone());
    queue.push_back(g.clone());
    while let Some(state) = queue.pop_front() {
        meter.tick()?;
        if contains_subgraph(&state, h) {
            return Ok(true);
        }
        if state.edge_count() == floor {
            continue;
        }
        for next in successors(&state) {
            let bucket = seen.entry(invariant_key(&next)).or_default();
            meter.spend(bucket.len() as u64)?;
            if bucket.iter().any(|b| is_isomorphic(b, &next)) {
                continue;
            }
            bucket.push(next.clone());
            queue.push_back(next);
        }
    }
    Ok(false)
}

fn successors(g: &Graph) -> Vec<Graph> {
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        out.push(g.without_edge(u, v).expect("edge exists"));
    }
    for v in 0..g.n() {
        let nv = g.neighbor_mask(v);
        for u in Bits(nv) {
            for w in Bits(nv & !g.neighbor_mask(u) & !((2u64 << u) - 1)) {
                out.push(super::apply_lift(g, u, v, w).expect("lift preconditions hold"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn lifts(g: &Graph, h: &Graph) -> bool {
        immersion_oracle_lifts(g, h, Budget::UNLIMITED).unwrap()
    }

    #[test]
    fn examples() {
        assert!(lifts(&path(3), &complete(2)));
        assert!(lifts(&cycle(5), &complete(3)));
        assert!(!lifts(&cycle(4), &complete(4)));
        assert!(lifts(&complete_multipartite(&[2, 2]), &complete(3)));
        assert!(!lifts(&star(3), &complete(3)));
    }
}
