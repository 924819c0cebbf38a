use super::{SolverError, VertexColoring};
use crate::graph::{bfs_tree, Bits, Graph};

fn check_sizes(g: &Graph, c: &VertexColoring) -> Result<(), SolverError> {
    if c.n() != g.n() {
        return Err(SolverError::SizeMismatch {
            coloring: c.n(),
            graph: g.n(),
        });
    }
    Ok(())
}

fn check_color(c: &VertexColoring, color: usize) -> Result<(), SolverError> {
    if color == 0 || color > c.k() {
        return Err(SolverError::ColorOutOfRange { color, k: c.k() });
    }
    Ok(())
}

/// c_ij: the subgraph induced by colour classes `i` and `j`, with the map
/// new label → original vertex.
pub fn color_subgraph(
    g: &Graph,
    c: &VertexColoring,
    i: usize,
    j: usize,
) -> Result<(Graph, Vec<usize>), SolverError> {
    check_sizes(g, c)?;
    check_color(c, i)?;
    check_color(c, j)?;
    if i == j {
        return Err(SolverError::SameColor { color: i });
    }
    Ok(g.induced_by_mask(c.class_mask(i) | c.class_mask(j)))
}

/// A shortest chain from `u` to `v` inside c_{c(u)c(v)}, i.e. a path using
/// only vertices of those two colours; `None` if they lie in different
/// components of it.
pub fn chain_between(
    g: &Graph,
    c: &VertexColoring,
    u: usize,
    v: usize,
) -> Result<Option<Vec<usize>>, SolverError> {
    check_sizes(g, c)?;
    for x in [u, v] {
        if x >= g.n() {
            return Err(SolverError::VertexOutOfRange {
                vertex: x,
                n: g.n(),
            });
        }
    }
    if c.color(u) == c.color(v) {
        return Err(SolverError::SameColor { color: c.color(u) });
    }
    let allowed = c.class_mask(c.color(u)) | c.class_mask(c.color(v));
    let parent = bfs_tree(g, u, allowed);
    if parent[v].is_none() {
        return Ok(None);
    }
    let mut path = vec![v];
    let mut x = v;
    while let Some(p) = parent[x] {
        path.push(p);
        x = p;
    }
    path.reverse();
    Ok(Some(path))
}

/// Vertices of colour `i` with a neighbour of every other colour.
pub fn dominating_vertices(
    g: &Graph,
    c: &VertexColoring,
    i: usize,
) -> Result<Vec<usize>, SolverError> {
    check_sizes(g, c)?;
    check_color(c, i)?;
    let classes: Vec<u64> = (1..=c.k()).map(|j| c.class_mask(j)).collect();
    Ok(Bits(classes[i - 1])
        .filter(|&u| {
            (1..=c.k())
                .filter(|&j| j != i)
                .all(|j| g.neighbor_mask(u) & classes[j - 1] != 0)
        })
        .collect())
}
