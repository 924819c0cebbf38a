//! Brute-force reference implementations used to cross-check the solvers.
#![allow(dead_code)]

use immerse_core::Graph;

fn subsets(n: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << n)
}

fn is_clique(g: &Graph, set: u64) -> bool {
    (0..g.n()).filter(|&v| set >> v & 1 == 1).all(|v| {
        (0..g.n())
            .filter(|&w| w != v && set >> w & 1 == 1)
            .all(|w| g.has_edge(v, w))
    })
}

pub fn naive_clique_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|&s| is_clique(g, s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn naive_independence_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|&s| {
            (0..g.n()).all(|v| {
                (0..g.n()).all(|w| !(s >> v & 1 == 1 && s >> w & 1 == 1 && g.has_edge(v, w)))
            })
        })
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Smallest k admitting a proper k-colouring, by trying every assignment.
pub fn naive_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for k in 1..=n {
        let mut colors = vec![0usize; n];
        loop {
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
            // odometer increment
            let mut i = 0;
            while i < n && colors[i] == k - 1 {
                colors[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!("n colours always suffice")
}

/// Maximum matching size: the lowest unmatched vertex is either left
/// unmatched or matched to each free neighbour in turn.
pub fn naive_matching_size(g: &Graph) -> usize {
    fn go(g: &Graph, free: u64) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        let mut best = go(g, rest);
        for w in 0..g.n() {
            if rest >> w & 1 == 1 && g.has_edge(v, w) {
                best = best.max(1 + go(g, rest & !(1 << w)));
            }
        }
        best
    }
    go(g, (1u64 << g.n()) - 1)
}

/// Tries every cyclic order with vertex 0 first.
pub fn naive_hamiltonian(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    let mut rest: Vec<usize> = (1..n).collect();
    permutations(&mut rest, 0, &mut |p| {
        let mut prev = 0;
        for &v in p {
            if !g.has_edge(prev, v) {
                return false;
            }
            prev = v;
        }
        g.has_edge(prev, 0)
    })
}

fn permutations(items: &mut [usize], k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    if k == items.len() {
        return f(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, f) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Every labelled graph on `n` vertices, independent of the library's
/// enumerator.
pub fn every_graph(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len())
        .map(|bits| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}
