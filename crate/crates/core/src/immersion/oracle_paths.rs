//! Exhaustive path-packing immersion search: every admissible corner map,
//! then backtracking over edge-disjoint paths, pattern edges with the fewest
//! still-available candidate paths first.

use std::collections::HashMap;
use std::rc::Rc;

use super::{EdgePath, ImmersionCertificate, OracleError};
use crate::budget::{Budget, Meter};
use crate::graph::{Bits, Graph};

/// Largest host edge count representable by the search's edge bitsets.
pub const ORACLE_MAX_EDGES: usize = 128;

#[derive(Debug)]
struct Candidate {
    vertices: Vec<usize>,
    edges: u128,
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Graph,
    edge_id: Vec<Vec<u8>>,
    incident: Vec<u128>,
    // simple paths between host pairs (a < b), oriented a → b, by length then lexicographically
    cache: HashMap<(usize, usize), Rc<Vec<Candidate>>>,
    meter: Meter,
}

impl Search<'_> {
    fn candidates(&mut self, a: usize, b: usize) -> Result<Rc<Vec<Candidate>>, OracleError> {
        let key = (a.min(b), a.max(b));
        if let Some(c) = self.cache.get(&key) {
            return Ok(Rc::clone(c));
        }
        let mut out = Vec::new();
        let mut stack = vec![key.0];
        self.enumerate(key.1, &mut stack, 1 << key.0, 0, &mut out)?;
        out.sort_by(|x: &Candidate, y: &Candidate| {
            x.vertices
                .len()
                .cmp(&y.vertices.len())
                .then_with(|| x.vertices.cmp(&y.vertices))
        });
        let rc = Rc::new(out);
        self.cache.insert(key, Rc::clone(&rc));
        Ok(rc)
    }

    fn enumerate(
        &mut self,
        target: usize,
        stack: &mut Vec<usize>,
        seen: u64,
        edges: u128,
        out: &mut Vec<Candidate>,
    ) -> Result<(), OracleError> {
        self.meter.tick()?;
        let last = *stack.last().expect("non-empty");
        for next in Bits(self.g.neighbor_mask(last) & !seen) {
            let e = edges | 1u128 << self.edge_id[last][next];
            stack.push(next);
            if next == target {
                out.push(Candidate {
                    vertices: stack.clone(),
                    edges: e,
                });
            } else {
                self.enumerate(target, stack, seen | (1 << next), e, out)?;
            }
            stack.pop();
        }
        Ok(())
    }

    fn pack(&mut self, corners: &[usize]) -> Result<Option<Vec<EdgePath>>, OracleError> {
        let h_edges: Vec<(usize, usize)> = self.h.edges().collect();
        let mut lists = Vec::with_capacity(h_edges.len());
        for &(x, y) in &h_edges {
            lists.push(self.candidates(corners[x], corners[y])?);
        }
        if lists.iter().any(|l| l.is_empty()) {
            return Ok(None);
        }
        let mut chosen = vec![usize::MAX; h_edges.len()];
        if self.backtrack(&h_edges, corners, &lists, &mut chosen, 0)? {
            let paths = h_edges
                .iter()
                .zip(&chosen)
                .zip(&lists)
                .map(|((&(x, y), &i), list)| {
                    let mut path = list[i].vertices.clone();
                    if path[0] != corners[x] {
                        path.reverse();
                    }
                    EdgePath { edge: (x, y), path }
                })
                .collect();
            Ok(Some(paths))
        } else {
            Ok(None)
        }
    }

    fn backtrack(
        &mut self,
        h_edges: &[(usize, usize)],
        corners: &[usize],
        lists: &[Rc<Vec<Candidate>>],
        chosen: &mut [usize],
        used: u128,
    ) -> Result<bool, OracleError> {
        self.meter.tick()?;
        let open: Vec<usize> = (0..h_edges.len())
            .filter(|&i| chosen[i] == usize::MAX)
            .collect();
        if open.is_empty() {
            return Ok(true);
        }
        let free = self.g.edge_count() as u32 - used.count_ones();
        if open.len() as u32 > free {
            return Ok(false);
        }
        // each open pattern edge consumes one free host edge at each corner
        let mut need = vec![0u32; self.h.n()];
        for &i in &open {
            need[h_edges[i].0] += 1;
            need[h_edges[i].1] += 1;
        }
        for (x, &c) in corners.iter().enumerate() {
            if need[x] > (self.incident[c] & !used).count_ones() {
                return Ok(false);
            }
        }
        // fail-first: the open edge with the fewest available candidates
        let mut pick = (usize::MAX, usize::MAX);
        for &i in &open {
            let avail = lists[i]
                .iter()
                .filter(|c| c.edges & used == 0)
                .take(pick.0)
                .count();
            if avail < pick.0 {
                pick = (avail, i);
                if avail == 0 {
                    return Ok(false);
                }
            }
        }
        let i = pick.1;
        let list = Rc::clone(&lists[i]);
        for (ci, cand) in list.iter().enumerate() {
            if cand.edges & used != 0 {
                continue;
            }
            chosen[i] = ci;
            if self.backtrack(h_edges, corners, lists, chosen, used | cand.edges)? {
                return Ok(true);
            }
        }
        chosen[i] = usize::MAX;
        Ok(false)
    }
}

/// Searches for an immersion of `h` in `g`.
///
/// `Ok(None)` is definitive: the full space of corner maps and path packings
/// was exhausted. Complete patterns only try corner *sets* (any assignment
/// of a set to the pattern vertices is equivalent).
pub fn immersion_oracle_paths(
    g: &Graph,
    h: &Graph,
    budget: Budget,
) -> Result<Option<ImmersionCertificate>, OracleError> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    if g.edge_count() > ORACLE_MAX_EDGES {
        return Err(OracleError::HostTooLarge {
            edges: g.edge_count(),
        });
    }
    let mut edge_id = vec![vec![u8::MAX; g.n()]; g.n()];
    let mut incident = vec![0u128; g.n()];
    for (i, (u, v)) in g.edges().enumerate() {
        edge_id[u][v] = i as u8;
        edge_id[v][u] = i as u8;
        incident[u] |= 1 << i;
        incident[v] |= 1 << i;
    }
    let mut s = Search {
        g,
        h,
        edge_id,
        incident,
        cache: HashMap::new(),
        meter: budget.meter(),
    };
    let symmetric = h.is_complete();
    let mut corners = Vec::with_capacity(h.n());
    let found = corner_maps(&mut s, symmetric, &mut corners, 0)?;
    Ok(found.map(|(corners, paths)| {
        ImmersionCertificate {
            pattern: h.clone(),
            corners,
            paths,
        }
        .normalized()
    }))
}

type Found = Option<(Vec<usize>, Vec<EdgePath>)>;

fn corner_maps(
    s: &mut Search<'_>,
    symmetric: bool,
    corners: &mut Vec<usize>,
    taken: u64,
) -> Result<Found, OracleError> {
    let x = corners.len();
    if x == s.h.n() {
        return Ok(s.pack(corners)?.map(|p| (corners.clone(), p)));
    }
    s.meter.tick()?;
    let floor = if symmetric {
        corners.last().map_or(0, |&c| c + 1)
    } else {
        0
    };
    for y in floor..s.g.n() {
        if taken & (1 << y) != 0 || s.g.degree(y) < s.h.degree(x) {
            continue;
        }
        corners.push(y);
        if let Some(found) = corner_maps(s, symmetric, corners, taken | (1 << y))? {
            return Ok(Some(found));
        }
        corners.pop();
    }
    Ok(None)
}
