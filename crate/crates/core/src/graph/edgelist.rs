//! Plain edge-list text: `n m` on the first line, then `m` lines `u v`.

use super::{Graph, GraphError};

fn err(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>, GraphError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| err(lineno, format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line \"n m\""))?;
    let head = numbers(header, lineno)?;
    let [n, m] = head[..] else {
        return Err(err(lineno, "header must be exactly \"n m\""));
    };
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines.by_ref().take(m) {
        let nums = numbers(line, lineno)?;
        let [u, v] = nums[..] else {
            return Err(err(lineno, "edge line must be exactly \"u v\""));
        };
        if u >= n || v >= n {
            return Err(err(lineno, format!("endpoint out of range for n={n}")));
        }
        if u == v {
            return Err(err(lineno, format!("loop at vertex {u}")));
        }
        edges.push((u, v));
    }
    if edges.len() < m {
        return Err(err(
            lineno + edges.len() + 1,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(err(lineno, "trailing content after the edge lines"));
    }
    Graph::from_edges(n, edges).map_err(|e| err(lineno, e.to_string()))
}

/// Normalized output: edges `u < v`, sorted.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::cycle;

    #[test]
    fn normalizes_orientation() {
        let g = parse_edge_list("3 2\n2 1\n0 1\n").unwrap();
        assert_eq!(serialize_edge_list(&g), "3 2\n0 1\n1 2\n");
        assert_eq!(
            parse_edge_list(&serialize_edge_list(&cycle(5))).unwrap(),
            cycle(5)
        );
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("3 2\n0 1\n").is_err());
        assert!(parse_edge_list("3 1\n0 3\n").is_err());
        assert!(parse_edge_list("3 1\n0 0\n").is_err());
        assert!(parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(parse_edge_list("3 x\n").is_err());
    }
}
