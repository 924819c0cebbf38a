//! Backtracking isomorphism and (non-induced) subgraph search for small graphs.

use crate::graph::{invariant_key, Bits, Graph};

/// An injective map `pattern vertex → host vertex` carrying every pattern
/// edge onto a host edge, if one exists.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    // place high-degree pattern vertices first
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(pattern.degree(x)), x));
    let mut map = vec![usize::MAX; pattern.n()];
    if place(host, pattern, &order, 0, 0, &mut map, false) {
        Some(map)
    } else {
        None
    }
}

pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> bool {
    find_subgraph(host, pattern).is_some()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if invariant_key(a) != invariant_key(b) {
        return false;
    }
    let mut order: Vec<usize> = (0..b.n()).collect();
    order.sort_by_key(|&x| (std::cmp::Reverse(b.degree(x)), x));
    let mut map = vec![usize::MAX; b.n()];
    place(a, b, &order, 0, 0, &mut map, true)
}

fn place(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    i: usize,
    taken: u64,
    map: &mut [usize],
    exact: bool,
) -> bool {
    if i == order.len() {
        return true;
    }
    let x = order[i];
    'cand: for y in Bits(host.vertex_mask() & !taken) {
        if exact {
            if host.degree(y) != pattern.degree(x) {
                continue;
            }
        } else if host.degree(y) < pattern.degree(x) {
            continue;
        }
        for &z in &order[..i] {
            let pe = pattern.has_edge(x, z);
            let he = host.has_edge(y, map[z]);
            if (pe && !he) || (exact && he && !pe) {
                continue 'cand;
            }
        }
        map[x] = y;
        if place(host, pattern, order, i + 1, taken | (1 << y), map, exact) {
            return true;
        }
    }
    map[x] = usize::MAX;
    false
}
