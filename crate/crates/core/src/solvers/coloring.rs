use std::fmt::Write as _;

use thiserror::Error;

use super::clique::max_clique_in;
use super::matching::maximum_matching;
use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::graph::{Bits, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("colour 0 at vertex {vertex}; colours start at 1")]
    ZeroColor { vertex: usize },
    #[error("colour {color} is unused although {k} colours are declared")]
    UnusedColor { color: usize, k: usize },
    #[error("colouring text, line {line}: {reason}")]
    Text { line: usize, reason: String },
}

/// Assignment of colours `1..=k` to the vertices `0..n`, every colour used.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexColoring {
    colors: Vec<usize>,
    k: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<usize>) -> Result<Self, ColoringError> {
        if let Some(vertex) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor { vertex });
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(color) = (1..=k).find(|&c| !used[c]) {
            return Err(ColoringError::UnusedColor { color, k });
        }
        Ok(VertexColoring { colors, k })
    }

    /// Renumbers colours by first appearance so any labelling becomes valid.
    pub(crate) fn normalized(raw: &[usize]) -> Self {
        let mut remap = std::collections::HashMap::new();
        let colors = raw
            .iter()
            .map(|c| {
                let next = remap.len() + 1;
                *remap.entry(*c).or_insert(next)
            })
            .collect();
        VertexColoring {
            colors,
            k: remap.len(),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn class_mask(&self, color: usize) -> u64 {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .fold(0, |m, (v, _)| m | (1 << v))
    }

    pub fn class(&self, color: usize) -> Vec<usize> {
        Bits(self.class_mask(color)).collect()
    }

    /// Adjacent vertices get different colours (and sizes agree).
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// `k` on the first line, then one `vertex color` line per vertex.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.k);
        for (v, c) in self.colors.iter().enumerate() {
            let _ = writeln!(out, "{v} {c}");
        }
        out
    }

    pub fn parse_text(text: &str) -> Result<Self, ColoringError> {
        let bad = |line: usize, reason: &str| ColoringError::Text {
            line,
            reason: reason.to_string(),
        };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (_, head) = lines.next().ok_or_else(|| bad(1, "missing colour count"))?;
        let k: usize = head
            .trim()
            .parse()
            .map_err(|_| bad(1, "colour count is not an integer"))?;
        let mut pairs = Vec::new();
        for (i, line) in lines {
            let nums: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse())
                .collect::<Result<_, _>>()
                .map_err(|_| bad(i + 1, "expected two integers"))?;
            let [v, c] = nums[..] else {
                return Err(bad(i + 1, "expected \"vertex color\""));
            };
            pairs.push((v, c));
        }
        let mut colors = vec![0; pairs.len()];
        for (i, &(v, c)) in pairs.iter().enumerate() {
            if v >= colors.len() || colors[v] != 0 {
                return Err(bad(i + 2, "vertices must be 0..n-1, each listed once"));
            }
            colors[v] = c;
        }
        let coloring = VertexColoring::new(colors)?;
        if coloring.k != k {
            return Err(bad(
                1,
                "declared colour count does not match the assignment",
            ));
        }
        Ok(coloring)
    }
}

/// Exact chromatic number with an optimal colouring as witness.
///
/// Graphs with α ≤ 2 are solved exactly through a maximum matching of the
/// complement (colour classes are exactly the matched pairs plus
/// singletons). Otherwise graphs below eight vertices are solved by
/// ascending k-colourability search, larger ones by DSATUR
/// branch-and-bound seeded with a largest-first greedy bound and a clique
/// lower bound.
pub fn chromatic_number(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, VertexColoring), BudgetExceeded> {
    if g.n() == 0 {
        return Ok((
            0,
            VertexColoring {
                colors: vec![],
                k: 0,
            },
        ));
    }
    if g.has_alpha_at_most_two() {
        let c = chromatic_by_pair_matching(g).expect("α ≤ 2 checked");
        return Ok((c.k, c));
    }
    let c = if g.n() < 8 {
        chromatic_exhaustive(g, budget)?
    } else {
        chromatic_branch_and_bound(g, budget)?
    };
    Ok((c.k, c))
}

/// Optimal colouring of an α ≤ 2 graph from a maximum matching of its
/// complement. `None` if α(g) ≥ 3.
pub fn chromatic_by_pair_matching(g: &Graph) -> Option<VertexColoring> {
    if !g.has_alpha_at_most_two() {
        return None;
    }
    let mut partner = vec![usize::MAX; g.n()];
    for (u, v) in maximum_matching(&g.complement()) {
        partner[u] = v;
        partner[v] = u;
    }
    let mut colors = vec![0; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if colors[v] == 0 {
            next += 1;
            colors[v] = next;
            if partner[v] != usize::MAX {
                colors[partner[v]] = next;
            }
        }
    }
    Some(VertexColoring { colors, k: next })
}

/// Largest-first greedy colouring (degree descending, index ascending).
pub fn greedy_largest_first(g: &Graph) -> VertexColoring {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut colors = vec![0usize; g.n()];
    for &v in &order {
        let used = g.neighbors(v).fold(0u64, |m, w| m | (1u64 << colors[w]));
        colors[v] = (!used & !1).trailing_zeros() as usize;
    }
    VertexColoring::normalized(&colors)
}

/// Ascending k-colourability search; colours are opened in order so each
/// partition is explored once.
pub fn chromatic_exhaustive(g: &Graph, budget: Budget) -> Result<VertexColoring, BudgetExceeded> {
    let mut meter = budget.meter();
    if g.n() == 0 {
        return Ok(VertexColoring {
            colors: vec![],
            k: 0,
        });
    }
    for k in 1..=g.n() {
        let mut colors = vec![0usize; g.n()];
        if k_color(g, k, 0, 0, &mut colors, &mut meter)? {
            return Ok(VertexColoring::normalized(&colors));
        }
    }
    unreachable!("n colours always suffice")
}

fn k_color(
    g: &Graph,
    k: usize,
    v: usize,
    used: usize,
    colors: &mut [usize],
    meter: &mut Meter,
) -> Result<bool, BudgetExceeded> {
    meter.tick()?;
    if v == g.n() {
        return Ok(true);
    }
    let blocked =
        Bits(g.neighbor_mask(v) & ((1u64 << v) - 1)).fold(0u64, |m, w| m | (1 << colors[w]));
    for c in 1..=(used + 1).min(k) {
        if blocked & (1 << c) == 0 {
            colors[v] = c;
            if k_color(g, k, v + 1, used.max(c), colors, meter)? {
                return Ok(true);
            }
        }
    }
    colors[v] = 0;
    Ok(false)
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    // counts[v][c]: neighbours of v currently coloured c
    counts: Vec<Vec<u16>>,
    sat: Vec<u64>,
    best: usize,
    best_colors: Vec<usize>,
    lower: usize,
    meter: Meter,
}

impl Dsatur<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = c;
        for w in Bits(self.g.neighbor_mask(v)) {
            self.counts[w][c] += 1;
            self.sat[w] |= 1 << c;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for w in Bits(self.g.neighbor_mask(v)) {
            self.counts[w][c] -= 1;
            if self.counts[w][c] == 0 {
                self.sat[w] &= !(1 << c);
            }
        }
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..self.g.n() {
            if self.colors[v] != 0 {
                continue;
            }
            let s = self.sat[v].count_ones();
            let d = Bits(self.g.neighbor_mask(v))
                .filter(|&w| self.colors[w] == 0)
                .count();
            match best {
                Some((bs, bd, _)) if (s, d) <= (bs, bd) => {}
                _ => best = Some((s, d, v)),
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn search(&mut self, used: usize) -> Result<(), BudgetExceeded> {
        self.meter.tick()?;
        if used >= self.best {
            return Ok(());
        }
        let Some(v) = self.pick() else {
            if used < self.best {
                self.best = used;
                self.best_colors = self.colors.clone();
            }
            return Ok(());
        };
        for c in 1..=used {
            if self.best == self.lower {
                return Ok(());
            }
            if self.sat[v] & (1 << c) == 0 {
                self.assign(v, c);
                self.search(used)?;
                self.unassign(v);
            }
        }
        if used + 1 < self.best && self.best != self.lower {
            self.assign(v, used + 1);
            self.search(used + 1)?;
            self.unassign(v);
        }
        Ok(())
    }
}

/// DSATUR branch-and-bound. The vertices of a maximum clique are
/// pre-coloured 1..ω, which is both the lower bound and a symmetry break.
pub fn chromatic_branch_and_bound(
    g: &Graph,
    budget: Budget,
) -> Result<VertexColoring, BudgetExceeded> {
    let n = g.n();
    if n == 0 {
        return Ok(VertexColoring {
            colors: vec![],
            k: 0,
        });
    }
    let mut meter = budget.meter();
    let clique = max_clique_in(g, g.vertex_mask(), &mut meter)?;
    let greedy = greedy_largest_first(g);
    let lower = clique.count_ones() as usize;
    if greedy.k == lower {
        return Ok(greedy);
    }
    let mut s = Dsatur {
        g,
        colors: vec![0; n],
        counts: vec![vec![0; n + 2]; n],
        sat: vec![0; n],
        best: greedy.k,
        best_colors: greedy.colors.clone(),
        lower,
        meter,
    };
    for (i, v) in Bits(clique).enumerate() {
        s.assign(v, i + 1);
    }
    s.search(lower)?;
    Ok(VertexColoring::normalized(&s.best_colors))
}
