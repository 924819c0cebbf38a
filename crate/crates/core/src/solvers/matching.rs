//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, one BFS per exposed vertex).

use std::collections::VecDeque;

use crate::graph::{Bits, Graph};

const NONE: usize = usize::MAX;

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in Bits(self.g.neighbor_mask(v)) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    self.used[self.mate[to]] = true;
                    self.queue.push_back(self.mate[to]);
                }
            }
        }
        None
    }
}

/// A maximum matching, edges `(u, v)` with `u < v`, sorted.
pub fn maximum_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut b = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for v in 0..n {
        if b.mate[v] == NONE {
            if let Some(w) = Bits(g.neighbor_mask(v)).find(|&w| b.mate[w] == NONE) {
                b.mate[v] = w;
                b.mate[w] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] != NONE {
            continue;
        }
        if let Some(mut v) = b.find_path(root) {
            while v != NONE {
                let pv = b.parent[v];
                let ppv = b.mate[pv];
                b.mate[v] = pv;
                b.mate[pv] = v;
                v = ppv;
            }
        }
    }
    let mut out: Vec<(usize, usize)> = (0..n)
        .filter(|&v| b.mate[v] != NONE && v < b.mate[v])
        .map(|v| (v, b.mate[v]))
        .collect();
    out.sort_unstable();
    out
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    2 * maximum_matching(g).len() == g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn check(g: &Graph, expected: usize) {
        let m = maximum_matching(g);
        assert_eq!(m.len(), expected);
        let mut seen = 0u64;
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert_eq!(seen & (1 << u | 1 << v), 0);
            seen |= 1 << u | 1 << v;
        }
    }

    #[test]
    fn examples() {
        check(&cycle(4), 2);
        check(&star(3), 1);
        check(&petersen(), 5);
        check(&cycle(5), 2);
        check(&Graph::empty(3).unwrap(), 0);
        check(&complete(7), 3);
    }

    #[test]
    fn needs_blossom_contraction() {
        // triangle 0-1-2 with pendant paths 2-3 and 0-4-5
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        check(&g, 3);
        // two triangles joined by an edge, each with a pendant
        let g = Graph::from_edges(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (2, 3),
                (0, 6),
                (5, 7),
            ],
        )
        .unwrap();
        check(&g, 4);
    }
}
