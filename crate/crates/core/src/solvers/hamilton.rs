use super::SolverError;
use crate::budget::{Budget, Meter};
use crate::graph::{Bits, Graph};

/// A Hamiltonian cycle starting at vertex 0, if one exists.
pub fn is_hamiltonian(g: &Graph, budget: Budget) -> Result<Option<Vec<usize>>, SolverError> {
    let n = g.n();
    if n < 3 {
        return Err(SolverError::TooFewVertices { n, min: 3 });
    }
    if g.min_degree().unwrap_or(0) < 2 || !g.is_connected() {
        return Ok(None);
    }
    let mut meter = budget.meter();
    let mut path = Vec::with_capacity(n);
    path.push(0);
    if extend(g, &mut path, 1, &mut meter)? {
        Ok(Some(path))
    } else {
        Ok(None)
    }
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    visited: u64,
    meter: &mut Meter,
) -> Result<bool, SolverError> {
    meter.tick()?;
    let n = g.n();
    let last = *path.last().expect("path starts at 0");
    if path.len() == n {
        return Ok(g.has_edge(last, 0));
    }
    let unvisited = g.vertex_mask() & !visited;
    // every unvisited vertex still needs two usable neighbours
    let open = unvisited | 1 | (1 << last);
    for v in Bits(unvisited) {
        if (g.neighbor_mask(v) & open).count_ones() < 2 {
            return Ok(false);
        }
    }
    for next in Bits(g.neighbor_mask(last) & unvisited) {
        path.push(next);
        if extend(g, path, visited | (1 << next), meter)? {
            return Ok(true);
        }
        path.pop();
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn assert_cycle(g: &Graph, c: &[usize]) {
        assert_eq!(c.len(), g.n());
        assert_eq!(c.iter().fold(0u64, |m, &v| m | 1 << v), g.vertex_mask());
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn examples() {
        let u = Budget::UNLIMITED;
        let c = is_hamiltonian(&cycle(5), u).unwrap().unwrap();
        assert_cycle(&cycle(5), &c);
        assert_eq!(is_hamiltonian(&star(3), u).unwrap(), None);
        assert_eq!(is_hamiltonian(&petersen(), u).unwrap(), None);
        let k = complete(8);
        assert_cycle(&k, &is_hamiltonian(&k, u).unwrap().unwrap());
        assert_eq!(
            is_hamiltonian(&complete(2), u),
            Err(SolverError::TooFewVertices { n: 2, min: 3 })
        );
        assert_eq!(
            is_hamiltonian(&petersen(), Budget::nodes(3)),
            Err(SolverError::BudgetExceeded)
        );
    }
}
