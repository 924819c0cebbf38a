use std::fmt::Write as _;

use super::SolverError;

/// Proper edge colouring of K_s with colours `1..=χ'(K_s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    s: usize,
    // indexed by pair_index(u, v)
    colors: Vec<usize>,
}

#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    let (u, v) = if u < v { (u, v) } else { (v, u) };
    v * (v - 1) / 2 + u
}

impl EdgeColoring {
    pub fn s(&self) -> usize {
        self.s
    }

    /// Panics on `u == v` or an endpoint ≥ s.
    pub fn color(&self, u: usize, v: usize) -> usize {
        assert!(u != v && u < self.s && v < self.s);
        self.colors[pair_index(u, v)]
    }

    pub fn num_colors(&self) -> usize {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Pairs `(u, v)`, `u < v`, of colour `c`, ordered by `v` then `u`.
    pub fn class(&self, c: usize) -> Vec<(usize, usize)> {
        self.pairs()
            .filter(|&(u, v)| self.color(u, v) == c)
            .collect()
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let s = self.s;
        (1..s).flat_map(|v| (0..v).map(move |u| (u, v)))
    }

    /// Every pair coloured, no two pairs at a common vertex share a colour.
    pub fn is_proper(&self) -> bool {
        self.colors.len() == self.s * self.s.saturating_sub(1) / 2
            && (0..self.s).all(|v| {
                let mut seen = 0u64;
                (0..self.s).filter(|&w| w != v).all(|w| {
                    let bit = 1u64 << self.color(v, w);
                    let fresh = seen & bit == 0;
                    seen |= bit;
                    fresh
                })
            })
    }

    /// `s` on the first line, then `u v color` per pair.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.s);
        for (u, v) in self.pairs() {
            let _ = writeln!(out, "{u} {v} {}", self.color(u, v));
        }
        out
    }
}

/// Circle-method edge colouring of K_s: s-1 colours (a 1-factorization)
/// for even s, s colours for odd s.
///
/// Odd s: colour r+1 pairs r+i with r-i (mod s); vertex r misses colour r+1.
/// Even s: the same on the s-1 rotating vertices, with the fixed vertex s-1
/// paired to r.
pub fn one_factorization(s: usize) -> Result<EdgeColoring, SolverError> {
    if s < 2 {
        return Err(SolverError::TooFewVertices { n: s, min: 2 });
    }
    let m = if s.is_multiple_of(2) { s - 1 } else { s };
    let mut colors = vec![0; s * (s - 1) / 2];
    for r in 0..m {
        for i in 1..=(m - 1) / 2 {
            let a = (r + i) % m;
            let b = (r + m - i) % m;
            colors[pair_index(a, b)] = r + 1;
        }
        if s.is_multiple_of(2) {
            colors[pair_index(r, s - 1)] = r + 1;
        }
    }
    Ok(EdgeColoring { s, colors })
}
