use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LiftError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot lift: {{{0}, {1}}} is not an edge")]
    MissingEdge(usize, usize),
    #[error("cannot lift: both outer endpoints are {0}")]
    SameEndpoints(usize),
    #[error("cannot lift: {{{0}, {1}}} is already an edge")]
    EdgePresent(usize, usize),
}

/// Lifts the edges `uv`, `vw` into `uw`. Requires `u != w` and `uw` absent so
/// the result stays simple.
pub fn apply_lift(g: &Graph, u: usize, v: usize, w: usize) -> Result<Graph, LiftError> {
    for x in [u, v, w] {
        g.check_vertex(x)?;
    }
    if u == w {
        return Err(LiftError::SameEndpoints(u));
    }
    if u == v || !g.has_edge(u, v) {
        return Err(LiftError::MissingEdge(u, v));
    }
    if v == w || !g.has_edge(v, w) {
        return Err(LiftError::MissingEdge(v, w));
    }
    if g.has_edge(u, w) {
        return Err(LiftError::EdgePresent(u, w));
    }
    Ok(g.without_edge(u, v)?.without_edge(v, w)?.with_edge(u, w)?)
}
