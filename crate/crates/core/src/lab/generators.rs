use std::io::BufRead;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::LabError;
use crate::constructions::is_k_s_dense;
use crate::graph::{full_mask, parse_graph6, Graph, MAX_VERTICES};

/// Largest n for the built-in exhaustive enumerators.
pub const MAX_ENUMERATION_VERTICES: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    // graph6 bit order: column by column through the upper triangle
    (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect()
}

fn check_order(n: usize) -> Result<(), LabError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(LabError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    Ok(())
}

/// Every labelled graph on `n ≤ 7` vertices, ordered by the graph6 bit string
/// read as a little-endian integer.
pub fn all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, LabError> {
    check_order(n)?;
    let pairs = pairs(n);
    let total = 1u64 << pairs.len();
    Ok((0..total).map(move |bits| {
        let mut adj = vec![0u64; n];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if bits >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        Graph::from_adjacency(adj)
    }))
}

/// Every labelled graph on `n ≤ 7` vertices with α ≤ 2, each exactly once, in
/// the order of [`all_graphs`]. Larger orders have to come from an external
/// enumerator through [`read_graph6_stream`].
pub fn alpha2_enumerate(n: usize) -> Result<impl Iterator<Item = Graph>, LabError> {
    Ok(all_graphs(n)?.filter(Graph::has_alpha_at_most_two))
}

/// The complement of a maximal triangle-free graph grown by seeded random
/// edge insertion. α ≤ 2 holds by construction; the result is a function of
/// `(n, seed)` only.
pub fn alpha2_random(n: usize, seed: u64) -> Result<Graph, LabError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(LabError::Order { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = pairs(n);
    pairs.shuffle(&mut rng);
    let mut adj = vec![0u64; n];
    for (u, v) in pairs {
        if adj[u] & adj[v] == 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    Ok(Graph::from_adjacency(adj).complement())
}

/// A seeded random (5,6)-dense graph: edges of K_n are visited in random
/// order and removed while the graph stays (5,6)-dense, until a random
/// number of removals has been made.
pub fn dense56_random(n: usize, seed: u64) -> Result<Graph, LabError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(LabError::Order { n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = pairs(n);
    edges.shuffle(&mut rng);
    let target = rng.random_range(0..=edges.len());
    let mut adj: Vec<u64> = (0..n).map(|v| full_mask(n) & !(1 << v)).collect();
    let mut removed = 0;
    for (u, v) in edges {
        if removed == target {
            break;
        }
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        if stays_dense(&adj, u, v) {
            removed += 1;
        } else {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
    }
    let g = Graph::from_adjacency(adj);
    debug_assert!(is_k_s_dense(&g, 5, 6).dense);
    Ok(g)
}

// only 5-sets through both endpoints of the removed edge can drop below 6 edges
fn stays_dense(adj: &[u64], u: usize, v: usize) -> bool {
    let others: Vec<usize> = (0..adj.len()).filter(|&x| x != u && x != v).collect();
    let mut ok = true;
    crate::constructions::for_each_subset(others.len(), 3, |idx| {
        let set = [u, v, others[idx[0]], others[idx[1]], others[idx[2]]];
        let mask = set.iter().fold(0u64, |m, &x| m | 1 << x);
        let twice: u32 = set.iter().map(|&x| (adj[x] & mask).count_ones()).sum();
        ok = twice >= 12;
        ok
    });
    ok
}

/// Reads one graph6 string per line; blank lines are skipped. The optional
/// `>>graph6<<` header is accepted at the start of any line.
pub fn read_graph6_stream(reader: impl BufRead) -> Result<Vec<Graph>, LabError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(|e| LabError::Stream {
            line: i + 1,
            reason: e.to_string(),
        })?;
        let text = line.trim();
        let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
        if text.is_empty() {
            continue;
        }
        let g = parse_graph6(text).map_err(|e| LabError::Stream {
            line: i + 1,
            reason: e.to_string(),
        })?;
        out.push(g);
    }
    Ok(out)
}
