//! Simple undirected graphs on dense vertex indices `0..n`.
//!
//! Adjacency is stored as one `u64` neighbour bitset per vertex, so a graph
//! holds at most [`MAX_VERTICES`] vertices. Graphs are immutable values:
//! every operation that "changes" a graph returns a new one.

mod edgelist;
mod graph6;
pub mod named;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use edgelist::{parse_edge_list, serialize_edge_list};
pub use graph6::{parse_graph6, serialize_graph6};

/// Largest supported vertex count (short-form graph6 limit).
pub const MAX_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, at most {MAX_VERTICES} are supported")]
    UnsupportedSize { n: usize },
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("vertex {vertex} listed twice")]
    DuplicateVertex { vertex: usize },
    #[error("graph6 error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("edge list error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
}

/// Iterator over the set bits of a `u64`, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

#[inline]
pub(crate) fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u64 {
    vertices.into_iter().fold(0u64, |m, v| m | (1u64 << v))
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::UnsupportedSize { n });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; loops and out-of-range endpoints are
    /// rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop { vertex: u });
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from neighbour bitsets. The caller guarantees symmetry
    /// and the absence of loops.
    pub(crate) fn from_adjacency(adj: Vec<u64>) -> Self {
        debug_assert!(adj.len() <= MAX_VERTICES);
        debug_assert!(adj.iter().enumerate().all(|(v, &row)| row & (1 << v) == 0
            && Bits(row).all(|w| w < adj.len() && adj[w] & (1 << v) != 0)));
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Panics if either endpoint is out of range.
    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n, "vertex out of range");
        self.adj[u] & (1 << v) != 0
    }

    /// Neighbour bitset of `v`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        Bits(self.adj[v])
    }

    /// Bitset of \overline{N}(v): vertices other than `v` not adjacent to it.
    pub fn non_neighbor_mask(&self, v: usize) -> u64 {
        full_mask(self.n) & !self.adj[v] & !(1 << v)
    }

    pub fn vertex_mask(&self) -> u64 {
        full_mask(self.n)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Minimum degree; `None` for the graph on zero vertices.
    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Whether `mask` spans a complete subgraph.
    pub fn is_clique(&self, mask: u64) -> bool {
        Bits(mask).all(|v| self.adj[v] & mask == mask & !(1 << v))
    }

    /// Whether `mask` spans an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        Bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    pub fn complement(&self) -> Graph {
        let all = full_mask(self.n);
        let adj = (0..self.n)
            .map(|v| all & !self.adj[v] & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced by `vertices`, relabelled `0..vertices.len()` in the
    /// order given. Returns the graph plus the map new label → old vertex.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut seen = 0u64;
        for &v in vertices {
            self.check_vertex(v)?;
            if seen & (1 << v) != 0 {
                return Err(GraphError::DuplicateVertex { vertex: v });
            }
            seen |= 1 << v;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                vertices
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[v] & (1 << w) != 0)
                    .fold(0u64, |m, (j, _)| m | (1 << j))
            })
            .collect();
        Ok((
            Graph {
                n: vertices.len(),
                adj,
            },
            vertices.to_vec(),
        ))
    }

    /// Subgraph induced by a vertex bitset, relabelled in increasing order.
    pub fn induced_by_mask(&self, mask: u64) -> (Graph, Vec<usize>) {
        let vertices: Vec<usize> = Bits(mask & full_mask(self.n)).collect();
        self.induced_subgraph(&vertices)
            .expect("mask vertices are in range and distinct")
    }

    /// `self - v`, relabelled so that vertices above `v` shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&w| w != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { n: self.n, adj })
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Ok(Graph { n: self.n, adj })
    }

    /// Relabels vertices: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        if perm.len() != self.n || mask_of(perm.iter().copied()) != full_mask(self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: perm.len(),
                n: self.n,
            });
        }
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Ok(Graph { n: self.n, adj })
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut frontier = 1u64 << source;
        let mut seen = frontier;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let next = Bits(frontier).fold(0u64, |m, v| m | self.adj[v]) & !seen;
            for v in Bits(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Shortest-path length; `None` stands for infinity (different components).
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.distances_from(u)[v])
    }

    /// Largest distance over all pairs; `None` if disconnected.
    /// Graphs with fewer than two vertices have diameter 0.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for u in 0..self.n {
            for d in self.distances_from(u) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Bitset of the component containing `v`.
    pub fn component_mask(&self, v: usize) -> u64 {
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let next = Bits(frontier).fold(0u64, |m, w| m | self.adj[w]) & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components as bitsets, ordered by lowest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = full_mask(self.n);
        let mut out = Vec::new();
        while left != 0 {
            let c = self.component_mask(left.trailing_zeros() as usize);
            out.push(c);
            left &= !c;
        }
        out
    }

    /// The graph on zero vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_mask(0) == full_mask(self.n)
    }

    /// An independent triple, if one exists (i.e. α ≥ 3). Lexicographically first.
    pub fn independent_triple(&self) -> Option<[usize; 3]> {
        let co = self.complement();
        for a in 0..self.n {
            for b in Bits(co.adj[a] & !full_mask(a + 1)) {
                if let Some(c) = Bits(co.adj[a] & co.adj[b] & !full_mask(b + 1)).next() {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    /// α(G) ≤ 2, i.e. the complement is triangle-free.
    pub fn has_alpha_at_most_two(&self) -> bool {
        self.independent_triple().is_none()
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u] & self.adj[v] == 0)
    }
}

/// Canonical key for use in hash-based buckets: vertex count, edge count and
/// sorted degree sequence.
pub(crate) fn invariant_key(g: &Graph) -> (usize, usize, Vec<usize>) {
    let mut degs: Vec<usize> = (0..g.n).map(|v| g.degree(v)).collect();
    degs.sort_unstable();
    (g.n, g.edge_count(), degs)
}

/// Breadth-first reachability order from `start` restricted to `allowed`,
/// returning the predecessor of each reached vertex.
pub(crate) fn bfs_tree(g: &Graph, start: usize, allowed: u64) -> Vec<Option<usize>> {
    let mut parent = vec![None; g.n];
    let mut seen = 1u64 << start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for w in Bits(g.adj[v] & allowed & !seen) {
            seen |= 1 << w;
            parent[w] = Some(v);
            queue.push_back(w);
        }
    }
    parent
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn complement_examples() {
        assert_eq!(complete(4).complement(), Graph::empty(4).unwrap());
        let c5c = cycle(5).complement();
        assert_eq!(c5c.edge_count(), 5);
        assert!((0..5).all(|v| c5c.degree(v) == 2));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c4 = two_k2.complement();
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.is_connected() && (0..4).all(|v| c4.degree(v) == 2));
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p3, map) = cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(map, vec![1, 2, 3]);
        let g = petersen();
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);
        assert!(matches!(
            g.induced_subgraph(&[0, 10]),
            Err(GraphError::VertexOutOfRange { vertex: 10, .. })
        ));
    }

    #[test]
    fn k6_minus_matching_five_subsets_have_eight_edges() {
        let g = cocktail_party(3);
        for skip in 0..6 {
            let s: Vec<usize> = (0..6).filter(|&v| v != skip).collect();
            assert_eq!(g.induced_subgraph(&s).unwrap().0.edge_count(), 8);
        }
    }

    #[test]
    fn distance_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.distance(0, 1).unwrap(), Some(1));
        assert_eq!(c5.distance(0, 2).unwrap(), Some(2));
        assert_eq!(c5.distance(3, 3).unwrap(), Some(0));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_k2.distance(0, 2).unwrap(), None);
        assert!(c5.distance(0, 5).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle(5).is_connected());
        assert!(cycle(5).complement().is_connected());
        assert!(!Graph::from_edges(4, [(0, 1), (2, 3)])
            .unwrap()
            .is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(!Graph::empty(2).unwrap().is_connected());
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]),
            Err(GraphError::Loop { vertex: 1 })
        );
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::empty(63).is_err());
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap().edge_count(),
            1
        );
    }

    #[test]
    fn independent_triple_matches_alpha() {
        assert_eq!(
            Graph::empty(3).unwrap().independent_triple(),
            Some([0, 1, 2])
        );
        assert!(cycle(5).has_alpha_at_most_two());
        assert!(!cycle(6).has_alpha_at_most_two());
    }
}
