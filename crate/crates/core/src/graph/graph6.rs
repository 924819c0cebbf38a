//! Short-form graph6 (n ≤ 62): one size byte `n + 63`, then the upper
//! triangle in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed
//! big-endian into 6-bit groups, each offset by 63.

use super::{Graph, GraphError, MAX_VERTICES};

fn err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input, missing length prefix"));
    };
    if first == b'>' {
        return Err(err(0, "graph6 header '>>graph6<<' is not accepted"));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, format!("byte {first} outside the range 63..126")));
    }
    if first == 126 {
        return Err(err(
            0,
            format!("long-form length prefix (n > {MAX_VERTICES}) is not supported"),
        ));
    }
    let n = (first - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let body = &bytes[1..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(i + 1, format!("byte {b} outside the range 63..126")));
        }
    }
    if body.len() < need {
        return Err(err(
            bytes.len(),
            format!(
                "truncated: expected {need} data bytes for n={n}, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > need {
        return Err(err(need + 1, "trailing garbage after adjacency data"));
    }
    let padding = need * 6 - bits;
    if padding > 0 && (body[need - 1] - 63) & ((1 << padding) - 1) != 0 {
        return Err(err(need, "non-zero padding bits"));
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj))
}

pub fn serialize_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(GraphError::UnsupportedSize { n });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            group = (group << 1) | g.has_edge(u, v) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(group + 63);
                group = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((group << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
