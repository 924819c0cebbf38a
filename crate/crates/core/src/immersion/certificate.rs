use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{named, parse_graph6, serialize_graph6, Graph, GraphError};

/// One routed pattern edge: `path` runs in the host from the corner of
/// `edge.0` to the corner of `edge.1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePath {
    pub edge: (usize, usize),
    pub path: Vec<usize>,
}

/// Witness that `pattern` is immersed in some host: an injective corner map
/// plus one host path per pattern edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ImmersionCertificate {
    pub pattern: Graph,
    /// `corners[x]` is the host vertex of pattern vertex `x`.
    pub corners: Vec<usize>,
    pub paths: Vec<EdgePath>,
}

#[derive(Debug, Error)]
pub enum CertificateFormatError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed certificate: field {field}: {source}")]
    Graph {
        field: &'static str,
        #[source]
        source: GraphError,
    },
}

#[derive(Serialize, Deserialize)]
struct CertificateFile {
    pattern: String,
    host: String,
    corners: Vec<usize>,
    paths: Vec<PathRecord>,
}

#[derive(Serialize, Deserialize)]
struct PathRecord {
    edge: [usize; 2],
    path: Vec<usize>,
}

impl ImmersionCertificate {
    /// Number of pattern vertices (the `t` of an immersed K_t).
    pub fn order(&self) -> usize {
        self.pattern.n()
    }

    /// K_t sitting directly on the clique `vertices`: every path is an edge.
    pub fn from_clique(vertices: &[usize]) -> Self {
        let t = vertices.len();
        let mut paths = Vec::with_capacity(t * t.saturating_sub(1) / 2);
        for a in 0..t {
            for b in a + 1..t {
                paths.push(EdgePath {
                    edge: (a, b),
                    path: vec![vertices[a], vertices[b]],
                });
            }
        }
        ImmersionCertificate {
            pattern: named::complete(t),
            corners: vertices.to_vec(),
            paths,
        }
    }

    /// Orients every entry as `u < v` and sorts entries by edge.
    pub fn normalized(mut self) -> Self {
        for p in &mut self.paths {
            if p.edge.0 > p.edge.1 {
                p.edge = (p.edge.1, p.edge.0);
                p.path.reverse();
            }
        }
        self.paths.sort_by_key(|a| a.edge);
        self
    }

    /// Host vertices used as interior path vertices.
    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.paths.iter().flat_map(|p| {
            p.path
                .get(1..p.path.len().saturating_sub(1))
                .unwrap_or(&[])
                .iter()
                .copied()
        })
    }

    /// JSON certificate file: `pattern` and `host` as graph6, `corners`,
    /// and `paths` as `{"edge": [u, v], "path": [...]}` objects.
    pub fn to_json(&self, host: &Graph) -> Result<String, GraphError> {
        let file = CertificateFile {
            pattern: serialize_graph6(&self.pattern)?,
            host: serialize_graph6(host)?,
            corners: self.corners.clone(),
            paths: self
                .paths
                .iter()
                .map(|p| PathRecord {
                    edge: [p.edge.0, p.edge.1],
                    path: p.path.clone(),
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&file).expect("certificate serializes"))
    }

    /// Parses a certificate file, returning the host and the certificate.
    pub fn from_json(text: &str) -> Result<(Graph, Self), CertificateFormatError> {
        let file: CertificateFile = serde_json::from_str(text)?;
        let pattern =
            parse_graph6(&file.pattern).map_err(|source| CertificateFormatError::Graph {
                field: "pattern",
                source,
            })?;
        let host = parse_graph6(&file.host).map_err(|source| CertificateFormatError::Graph {
            field: "host",
            source,
        })?;
        let paths = file
            .paths
            .into_iter()
            .map(|r| EdgePath {
                edge: (r.edge[0], r.edge[1]),
                path: r.path,
            })
            .collect();
        Ok((
            host,
            ImmersionCertificate {
                pattern,
                corners: file.corners,
                paths,
            },
        ))
    }
}
