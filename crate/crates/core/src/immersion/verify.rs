use std::collections::HashMap;

use serde::Serialize;

use super::ImmersionCertificate;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationResult {
    pub valid: bool,
    /// No path visits a corner as an interior vertex. Implies `valid`.
    pub strong: bool,
    pub violation: Option<String>,
}

impl VerificationResult {
    fn invalid(reason: String) -> Self {
        VerificationResult {
            valid: false,
            strong: false,
            violation: Some(reason),
        }
    }

    /// e.g. "valid strong immersion of K_3".
    pub fn summary(&self, cert: &ImmersionCertificate) -> String {
        let name = if cert.pattern.is_complete() {
            format!("K_{}", cert.order())
        } else {
            format!("a {}-vertex pattern", cert.order())
        };
        match (&self.violation, self.strong) {
            (Some(v), _) => format!("invalid certificate: {v}"),
            (None, true) => format!("valid strong immersion of {name}"),
            (None, false) => format!("valid immersion of {name}"),
        }
    }
}

/// Local check of a certificate against `host`: injective corners, one
/// simple host path per pattern edge with the right endpoints, and no host
/// edge on two paths. Performs no search.
pub fn verify_certificate(host: &Graph, cert: &ImmersionCertificate) -> VerificationResult {
    match check(host, cert) {
        Err(reason) => VerificationResult::invalid(reason),
        Ok(()) => {
            let corner_mask = cert.corners.iter().fold(0u64, |m, &c| m | 1 << c);
            let strong = cert
                .interior_vertices()
                .all(|v| corner_mask & (1 << v) == 0);
            VerificationResult {
                valid: true,
                strong,
                violation: None,
            }
        }
    }
}

fn check(host: &Graph, cert: &ImmersionCertificate) -> Result<(), String> {
    let h = &cert.pattern;
    if cert.corners.len() != h.n() {
        return Err(format!(
            "{} corners given for a pattern on {} vertices",
            cert.corners.len(),
            h.n()
        ));
    }
    let mut owner = vec![usize::MAX; host.n()];
    for (x, &c) in cert.corners.iter().enumerate() {
        if c >= host.n() {
            return Err(format!(
                "corner of pattern vertex {x} is host vertex {c}, out of range"
            ));
        }
        if owner[c] != usize::MAX {
            return Err(format!(
                "corner map not injective: pattern vertices {} and {x} both map to host vertex {c}",
                owner[c]
            ));
        }
        owner[c] = x;
    }
    let mut routed: HashMap<(usize, usize), usize> = HashMap::new();
    let mut used: HashMap<(usize, usize), (usize, usize)> = HashMap::new();
    for entry in &cert.paths {
        let (a, b) = entry.edge;
        if a >= h.n() || b >= h.n() || a == b || !h.has_edge(a, b) {
            return Err(format!("entry for [{a}, {b}] is not a pattern edge"));
        }
        let key = (a.min(b), a.max(b));
        if routed.insert(key, 0).is_some() {
            return Err(format!("pattern edge [{}, {}] routed twice", key.0, key.1));
        }
        let p = &entry.path;
        let (from, to) = (cert.corners[a], cert.corners[b]);
        if p.first() != Some(&from) || p.last() != Some(&to) {
            return Err(format!(
                "path for [{a}, {b}] must run from host vertex {from} to {to}, got {p:?}"
            ));
        }
        let mut seen = 0u64;
        for &v in p {
            if v >= host.n() {
                return Err(format!(
                    "path for [{a}, {b}] visits vertex {v}, out of range"
                ));
            }
            if seen & (1 << v) != 0 {
                return Err(format!("path for [{a}, {b}] repeats vertex {v}"));
            }
            seen |= 1 << v;
        }
        for w in p.windows(2) {
            let (x, y) = (w[0].min(w[1]), w[0].max(w[1]));
            if !host.has_edge(x, y) {
                return Err(format!(
                    "path for [{a}, {b}] uses {{{x}, {y}}}, which is not a host edge"
                ));
            }
            if let Some(&(c, d)) = used.get(&(x, y)) {
                return Err(format!(
                    "host edge {{{x}, {y}}} is shared by the paths for [{c}, {d}] and [{a}, {b}]"
                ));
            }
            used.insert((x, y), (a, b));
        }
    }
    if let Some((u, v)) = h.edges().find(|e| !routed.contains_key(e)) {
        return Err(format!("pattern edge [{u}, {v}] has no path"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::immersion::EdgePath;

    fn k3_in_c5(paths: [Vec<usize>; 3]) -> ImmersionCertificate {
        let [p01, p12, p02] = paths;
        ImmersionCertificate {
            pattern: complete(3),
            corners: vec![0, 2, 4],
            paths: vec![
                EdgePath {
                    edge: (0, 1),
                    path: p01,
                },
                EdgePath {
                    edge: (1, 2),
                    path: p12,
                },
                EdgePath {
                    edge: (0, 2),
                    path: p02,
                },
            ],
        }
    }

    #[test]
    fn cycle_arcs_are_strong() {
        let r = verify_certificate(
            &cycle(5),
            &k3_in_c5([vec![0, 1, 2], vec![2, 3, 4], vec![0, 4]]),
        );
        assert_eq!(
            r,
            VerificationResult {
                valid: true,
                strong: true,
                violation: None
            }
        );
    }

    #[test]
    fn shared_edge_is_named() {
        let r = verify_certificate(
            &cycle(5),
            &k3_in_c5([vec![0, 1, 2], vec![2, 1, 0, 4], vec![0, 4]]),
        );
        assert!(!r.valid && !r.strong);
        // the second path also reuses {1,2}; the first collision reported is {1, 2}
        assert!(r.violation.unwrap().contains("{1, 2}"));
    }

    #[test]
    fn weak_immersion_detected() {
        // K_2 on corners 0,2 of P3, path through nothing; add a K_3 whose path passes a corner
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)]).unwrap();
        let cert = ImmersionCertificate {
            pattern: complete(3),
            corners: vec![0, 1, 2],
            paths: vec![
                EdgePath {
                    edge: (0, 1),
                    path: vec![0, 1],
                },
                EdgePath {
                    edge: (1, 2),
                    path: vec![1, 2],
                },
                EdgePath {
                    edge: (0, 2),
                    path: vec![0, 3, 2],
                },
            ],
        };
        assert!(verify_certificate(&g, &cert).strong);
        let cert2 = ImmersionCertificate {
            pattern: complete(2),
            corners: vec![0, 2],
            paths: vec![EdgePath {
                edge: (0, 1),
                path: vec![0, 1, 2],
            }],
        };
        let r = verify_certificate(&g, &cert2);
        assert!(r.valid && r.strong);
        let cert3 = ImmersionCertificate {
            pattern: Graph::from_edges(3, [(0, 2)]).unwrap(),
            corners: vec![0, 1, 2],
            paths: vec![EdgePath {
                edge: (0, 2),
                path: vec![0, 1, 2],
            }],
        };
        let r = verify_certificate(&g, &cert3);
        assert!(r.valid && !r.strong);
    }

    #[test]
    fn malformed_certificates() {
        let g = cycle(5);
        let mut c = k3_in_c5([vec![0, 1, 2], vec![2, 3, 4], vec![0, 4]]);
        c.corners = vec![0, 0, 4];
        assert!(verify_certificate(&g, &c)
            .violation
            .unwrap()
            .contains("not injective"));
        let c = k3_in_c5([vec![0, 1, 2], vec![2, 3, 4], vec![0, 3, 4]]);
        assert!(verify_certificate(&g, &c)
            .violation
            .unwrap()
            .contains("not a host edge"));
        let c = k3_in_c5([vec![0, 1, 2], vec![2, 3, 4], vec![4, 0]]);
        assert!(verify_certificate(&g, &c)
            .violation
            .unwrap()
            .contains("must run from"));
        let mut c = k3_in_c5([vec![0, 1, 2], vec![2, 3, 4], vec![0, 4]]);
        c.paths.pop();
        assert!(verify_certificate(&g, &c)
            .violation
            .unwrap()
            .contains("has no path"));
        let c = k3_in_c5([vec![0, 1, 0, 1, 2], vec![2, 3, 4], vec![0, 4]]);
        assert!(verify_certificate(&g, &c)
            .violation
            .unwrap()
            .contains("repeats"));
    }
}
