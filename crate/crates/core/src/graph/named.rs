//! Named graph families used throughout the tests and constructions.

use super::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|v| (0..v).map(move |u| (u, v)))).expect("valid size")
}

/// The cycle 0-1-...-(n-1)-0; for n < 3 this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    if n >= 3 {
        edges.push((0, n - 1));
    }
    Graph::from_edges(n, edges).expect("valid size")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid size")
}

/// Vertices are laid out class by class in the order given.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let mut class = Vec::new();
    for (c, &s) in sizes.iter().enumerate() {
        class.extend(std::iter::repeat_n(c, s));
    }
    let n = class.len();
    Graph::from_edges(
        n,
        (0..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| class[u] != class[v]),
    )
    .expect("valid size")
}

/// K_{1,k} with centre 0.
pub fn star(k: usize) -> Graph {
    Graph::from_edges(k + 1, (1..=k).map(|v| (0, v))).expect("valid size")
}

/// K_{2k} minus the perfect matching {2i, 2i+1}.
pub fn cocktail_party(k: usize) -> Graph {
    complete_multipartite(&vec![2; k])
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i-(i+5).
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges).expect("valid size")
}

/// K_{2,n-2} plus the edge inside the class of size two (vertices 0 and 1).
/// Its complement has no induced C4, yet every optimal colouring has a class
/// of size n-2.
pub fn triangular_book(n: usize) -> Graph {
    assert!(n >= 2);
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        edges.push((0, v));
        edges.push((1, v));
    }
    Graph::from_edges(n, edges).expect("valid size")
}
