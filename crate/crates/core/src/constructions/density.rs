use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityWitness {
    pub dense: bool,
    /// The lexicographically first k-subset inducing fewer than s edges.
    pub violating_set: Option<Vec<usize>>,
}

/// Calls `f` on every k-subset of `0..n` in lexicographic order until it
/// returns `false`. Returns whether the enumeration ran to completion.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn induced_edges(g: &Graph, set: &[usize]) -> usize {
    let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
    set.iter()
        .map(|&v| (g.neighbor_mask(v) & mask).count_ones() as usize)
        .sum::<usize>()
        / 2
}

/// Whether every k-subset induces at least s edges (vacuously true when n < k).
pub fn is_k_s_dense(g: &Graph, k: usize, s: usize) -> DensityWitness {
    let mut violating = None;
    for_each_subset(g.n(), k, |set| {
        if induced_edges(g, set) < s {
            violating = Some(set.to_vec());
            false
        } else {
            true
        }
    });
    DensityWitness {
        dense: violating.is_none(),
        violating_set: violating,
    }
}

/// A 4-set inducing C4 in the complement (equivalently 2K2 in `g`), first in
/// lexicographic order, listed as the cycle order a-b-c-d in the complement.
pub fn complement_has_induced_c4(g: &Graph) -> Option<[usize; 4]> {
    let co = g.complement();
    let mut found = None;
    for_each_subset(g.n(), 4, |set| {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        let two_regular = set
            .iter()
            .all(|&v| (co.neighbor_mask(v) & mask).count_ones() == 2);
        // a 2-regular graph on 4 vertices is C4
        if two_regular {
            let a = set[0];
            let mut nbrs = set.iter().copied().filter(|&v| co.has_edge(a, v));
            let (b, d) = (nbrs.next().unwrap(), nbrs.next().unwrap());
            let c = set
                .iter()
                .copied()
                .find(|&v| v != a && v != b && v != d)
                .unwrap();
            found = Some([a, b, c, d]);
            false
        } else {
            true
        }
    });
    found
}
