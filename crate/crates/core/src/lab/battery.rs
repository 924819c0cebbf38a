//! Necessary conditions for a vertex-minimal graph with α ≤ 2 that has no
//! K_χ immersion.

use serde::Serialize;

use crate::budget::{Budget, BudgetExceeded};
use crate::graph::{serialize_graph6, Bits, Graph};
use crate::solvers::{
    chromatic_branch_and_bound, chromatic_exhaustive, chromatic_number, clique_number,
    independence_number, is_hamiltonian, maximum_matching, VertexColoring,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    SkippedBudget,
    /// Not reached because an earlier condition already excluded the graph.
    NotEvaluated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Vertices {
        vertices: Vec<usize>,
    },
    Vertex {
        vertex: usize,
    },
    Pair {
        u: usize,
        v: usize,
    },
    Coloring {
        colors: Vec<usize>,
    },
    CliqueNumber {
        omega: usize,
    },
    /// Exhaustive search found no Hamiltonian cycle.
    NoHamiltonianCycle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub id: &'static str,
    pub statement: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub graph6: String,
    pub n: usize,
    /// True iff some condition in `conditions` fails.
    pub excluded: bool,
    pub chromatic_number: Option<usize>,
    pub conditions: Vec<ConditionResult>,
    /// Holds only for edge-minimal counterexamples; never affects `excluded`.
    pub edge_minimal: ConditionResult,
    pub not_applicable: Vec<&'static str>,
}

impl PropertyReport {
    pub fn condition(&self, id: &str) -> Option<&ConditionResult> {
        if id == self.edge_minimal.id {
            return Some(&self.edge_minimal);
        }
        self.conditions.iter().find(|c| c.id == id)
    }

    pub fn verdict(&self, id: &str) -> Option<Verdict> {
        self.condition(id).map(|c| c.verdict)
    }

    pub fn failed(&self) -> impl Iterator<Item = &ConditionResult> {
        self.conditions
            .iter()
            .filter(|c| c.verdict == Verdict::Fails)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct BatteryOptions {
    pub budget: Budget,
    /// Evaluate every condition instead of stopping at the first failure.
    pub full: bool,
}

/// Evaluation order, cheapest first.
pub const CONDITIONS: [(&str, &str); 15] = [
    ("a", "independence number at most 2"),
    ("i", "connected"),
    ("d", "complement connected"),
    ("j", "minimum degree at least ceil(n/2)"),
    ("m", "diameter at most 2"),
    (
        "g",
        "non-adjacent pairs have at most (n-1)/2 common neighbours",
    ),
    ("f", "complement minus any vertex has a perfect matching"),
    ("l", "graph minus any vertex has a perfect matching"),
    ("n", "chromatic number at least 8"),
    ("b", "n at most 2 chi"),
    ("e", "n equals 2 chi - 1"),
    (
        "pair_coloring",
        "graph minus any vertex has a (chi-1)-colouring with all classes of size 2",
    ),
    ("h", "clique number at least (n+1)/4"),
    ("c", "chi-colour-critical"),
    ("k", "Hamiltonian"),
];

pub const EDGE_MINIMAL: (&str, &str) = ("o", "deleting any edge raises the independence number");

const NOT_APPLICABLE: &str =
    "minimality of chi among all counterexamples compares across graphs and is not checkable on one graph";

enum Outcome {
    Holds,
    Fails(Witness),
    Skipped,
}

impl From<Result<Option<Witness>, BudgetExceeded>> for Outcome {
    fn from(r: Result<Option<Witness>, BudgetExceeded>) -> Self {
        match r {
            Ok(None) => Outcome::Holds,
            Ok(Some(w)) => Outcome::Fails(w),
            Err(BudgetExceeded) => Outcome::Skipped,
        }
    }
}

struct Context<'a> {
    g: &'a Graph,
    budget: Budget,
    chi: Option<Result<VertexColoring, BudgetExceeded>>,
}

impl Context<'_> {
    fn coloring(&mut self) -> Result<VertexColoring, BudgetExceeded> {
        let (g, budget) = (self.g, self.budget);
        self.chi
            .get_or_insert_with(|| chromatic_number(g, budget).map(|(_, c)| c))
            .clone()
    }

    fn chi(&mut self) -> Result<usize, BudgetExceeded> {
        self.coloring().map(|c| c.k())
    }

    fn evaluate(&mut self, id: &str) -> Outcome {
        let g = self.g;
        let n = g.n();
        let r: Result<Option<Witness>, BudgetExceeded> = match id {
            "a" => Ok(g.independent_triple().map(|t| Witness::Vertices {
                vertices: t.to_vec(),
            })),
            "i" => Ok(split_component(g)),
            "d" => Ok(split_component(&g.complement())),
            "j" => Ok((0..n)
                .find(|&v| 2 * g.degree(v) < n)
                .map(|vertex| Witness::Vertex { vertex })),
            "m" => Ok(far_pair(g)),
            "g" => Ok(crowded_pair(g)),
            "f" => Ok(vertex_without_perfect_matching(&g.complement())),
            "l" => Ok(vertex_without_perfect_matching(g)),
            "n" => self.coloring().map(|c| {
                (c.k() < 8).then(|| Witness::Coloring {
                    colors: c.colors().to_vec(),
                })
            }),
            "b" => self.coloring().map(|c| {
                (n > 2 * c.k()).then(|| Witness::Coloring {
                    colors: c.colors().to_vec(),
                })
            }),
            "e" => self.coloring().map(|c| {
                (n + 1 != 2 * c.k()).then(|| Witness::Coloring {
                    colors: c.colors().to_vec(),
                })
            }),
            "pair_coloring" => self.chi().map(|chi| {
                (0..n)
                    .find(|&v| pair_coloring(g, v).is_none_or(|c| c.k() + 1 != chi))
                    .map(|vertex| Witness::Vertex { vertex })
            }),
            "h" => clique_number(g, self.budget)
                .map(|(omega, _)| (4 * omega < n + 1).then_some(Witness::CliqueNumber { omega })),
            "c" => self.chi().and_then(|chi| {
                for v in 0..n {
                    let (h, _) = g.remove_vertex(v).expect("in range");
                    if chromatic_number(&h, self.budget)?.0 == chi {
                        return Ok(Some(Witness::Vertex { vertex: v }));
                    }
                }
                Ok(None)
            }),
            "k" => {
                if n < 3 {
                    Ok(Some(Witness::NoHamiltonianCycle))
                } else {
                    match is_hamiltonian(g, self.budget) {
                        Ok(cycle) => Ok(cycle.is_none().then_some(Witness::NoHamiltonianCycle)),
                        Err(_) => Err(BudgetExceeded),
                    }
                }
            }
            "o" => edge_not_critical(g, self.budget),
            other => unreachable!("unknown condition {other}"),
        };
        r.into()
    }
}

fn split_component(g: &Graph) -> Option<Witness> {
    if g.n() == 0 || g.is_connected() {
        return None;
    }
    Some(Witness::Vertices {
        vertices: Bits(g.component_mask(0)).collect(),
    })
}

fn far_pair(g: &Graph) -> Option<Witness> {
    let n = g.n();
    (0..n).find_map(|u| {
        let d = g.distances_from(u);
        (u + 1..n)
            .find(|&v| d[v].is_none_or(|x| x > 2))
            .map(|v| Witness::Pair { u, v })
    })
}

fn crowded_pair(g: &Graph) -> Option<Witness> {
    let n = g.n();
    (0..n).find_map(|u| {
        (u + 1..n)
            .find(|&v| {
                !g.has_edge(u, v)
                    && 2 * (g.neighbor_mask(u) & g.neighbor_mask(v)).count_ones() as usize > n - 1
            })
            .map(|v| Witness::Pair { u, v })
    })
}

fn vertex_without_perfect_matching(g: &Graph) -> Option<Witness> {
    (0..g.n())
        .find(|&v| {
            let (h, _) = g.remove_vertex(v).expect("in range");
            2 * maximum_matching(&h).len() != h.n()
        })
        .map(|vertex| Witness::Vertex { vertex })
}

fn edge_not_critical(g: &Graph, budget: Budget) -> Result<Option<Witness>, BudgetExceeded> {
    let (alpha, _) = independence_number(g, budget)?;
    for (u, v) in g.edges() {
        let h = g.without_edge(u, v).expect("edge present");
        if independence_number(&h, budget)?.0 <= alpha {
            return Ok(Some(Witness::Pair { u, v }));
        }
    }
    Ok(None)
}

/// The colouring of `g - v` whose classes are the edges of a perfect
/// matching of the complement of `g - v`, in the labelling of `g - v`.
/// `None` if that complement has no perfect matching.
pub fn pair_coloring(g: &Graph, v: usize) -> Option<VertexColoring> {
    let (h, _) = g.remove_vertex(v).ok()?;
    let matching = maximum_matching(&h.complement());
    if 2 * matching.len() != h.n() {
        return None;
    }
    let mut colors = vec![0; h.n()];
    for (c, &(a, b)) in matching.iter().enumerate() {
        colors[a] = c + 1;
        colors[b] = c + 1;
    }
    VertexColoring::new(colors).ok()
}

/// [`property_battery_with`] with default options at the given budget.
pub fn property_battery(g: &Graph, budget: Budget) -> PropertyReport {
    property_battery_with(
        g,
        &BatteryOptions {
            budget,
            full: false,
        },
    )
}

/// Runs every condition in [`CONDITIONS`] order. Without `full`, evaluation
/// stops at the first failure and later conditions, including the
/// edge-minimal one, are reported as not evaluated.
pub fn property_battery_with(g: &Graph, options: &BatteryOptions) -> PropertyReport {
    let mut cx = Context {
        g,
        budget: options.budget,
        chi: None,
    };
    let mut excluded = false;
    let mut conditions = Vec::with_capacity(CONDITIONS.len());
    for (id, statement) in CONDITIONS {
        let (verdict, witness) = if excluded && !options.full {
            (Verdict::NotEvaluated, None)
        } else {
            resolve(cx.evaluate(id))
        };
        excluded |= verdict == Verdict::Fails;
        conditions.push(ConditionResult {
            id,
            statement,
            verdict,
            witness,
        });
    }
    let (verdict, witness) = if excluded && !options.full {
        (Verdict::NotEvaluated, None)
    } else {
        resolve(cx.evaluate(EDGE_MINIMAL.0))
    };
    let chromatic_number = match cx.chi {
        Some(Ok(c)) => Some(c.k()),
        _ => None,
    };
    PropertyReport {
        graph6: serialize_graph6(g).unwrap_or_default(),
        n: g.n(),
        excluded,
        chromatic_number,
        conditions,
        edge_minimal: ConditionResult {
            id: EDGE_MINIMAL.0,
            statement: EDGE_MINIMAL.1,
            verdict,
            witness,
        },
        not_applicable: vec![NOT_APPLICABLE],
    }
}

fn resolve(o: Outcome) -> (Verdict, Option<Witness>) {
    match o {
        Outcome::Holds => (Verdict::Holds, None),
        Outcome::Fails(w) => (Verdict::Fails, Some(w)),
        Outcome::Skipped => (Verdict::SkippedBudget, None),
    }
}

/// Chromatic number by a solver that does not go through complement
/// matchings.
fn chi_by_search(g: &Graph, budget: Budget) -> Result<usize, BudgetExceeded> {
    if g.n() < 8 {
        chromatic_exhaustive(g, budget).map(|c| c.k())
    } else {
        chromatic_branch_and_bound(g, budget).map(|c| c.k())
    }
}

/// Independently re-checks that the witness of a failed condition really
/// shows the failure. Conditions that did not fail are never confirmed.
pub fn revalidate(
    g: &Graph,
    condition: &ConditionResult,
    budget: Budget,
) -> Result<bool, BudgetExceeded> {
    let Some(witness) = condition
        .witness
        .as_ref()
        .filter(|_| condition.verdict == Verdict::Fails)
    else {
        return Ok(false);
    };
    let n = g.n();
    let coloring = |colors: &[usize]| {
        VertexColoring::new(colors.to_vec())
            .ok()
            .filter(|c| c.n() == n && c.is_proper(g))
    };
    let separated = |h: &Graph, set: &[usize]| {
        let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
        !set.is_empty() && set.len() < h.n() && set.iter().all(|&v| h.neighbor_mask(v) & !mask == 0)
    };
    let no_pm_after = |h: &Graph, v: usize| {
        v < n && {
            let (h, _) = h.remove_vertex(v).expect("checked");
            h.n() % 2 == 1 || 2 * maximum_matching(&h).len() != h.n()
        }
    };
    Ok(match (condition.id, witness) {
        ("a", Witness::Vertices { vertices }) => {
            vertices.len() == 3 && vertices.iter().all(|&v| v < n) && {
                let mask = vertices.iter().fold(0u64, |m, &v| m | 1 << v);
                mask.count_ones() == 3 && g.is_independent(mask)
            }
        }
        ("i", Witness::Vertices { vertices }) => separated(g, vertices),
        ("d", Witness::Vertices { vertices }) => separated(&g.complement(), vertices),
        ("j", &Witness::Vertex { vertex }) => vertex < n && 2 * g.degree(vertex) < n,
        ("m", &Witness::Pair { u, v }) => {
            u < n && v < n && u != v && g.distances_from(u)[v].is_none_or(|d| d > 2)
        }
        ("g", &Witness::Pair { u, v }) => {
            u < n && v < n && u != v && !g.has_edge(u, v) && {
                let common = Bits(g.neighbor_mask(u) & g.neighbor_mask(v)).count();
                2 * common > n - 1
            }
        }
        ("f", &Witness::Vertex { vertex }) => no_pm_after(&g.complement(), vertex),
        ("l", &Witness::Vertex { vertex }) => no_pm_after(g, vertex),
        ("n", Witness::Coloring { colors }) => coloring(colors).is_some_and(|c| c.k() < 8),
        ("b", Witness::Coloring { colors }) => coloring(colors).is_some_and(|c| n > 2 * c.k()),
        ("e", Witness::Coloring { colors }) => match coloring(colors) {
            Some(c) => chi_by_search(g, budget)? == c.k() && n + 1 != 2 * c.k(),
            None => false,
        },
        ("pair_coloring", &Witness::Vertex { vertex }) => {
            vertex < n && {
                let chi = chi_by_search(g, budget)?;
                let (h, _) = g.remove_vertex(vertex).expect("checked");
                // a (chi-1)-colouring of g - v with classes of size exactly 2 needs n - 1 = 2(chi - 1)
                // and then is the same thing as a perfect matching of the complement of g - v
                h.n() != 2 * (chi.max(1) - 1)
                    || 2 * maximum_matching(&h.complement()).len() != h.n()
            }
        }
        ("h", &Witness::CliqueNumber { omega }) => {
            4 * omega < n + 1 && independence_number(&g.complement(), budget)?.0 == omega
        }
        ("c", &Witness::Vertex { vertex }) => {
            vertex < n && {
                let (h, _) = g.remove_vertex(vertex).expect("checked");
                chi_by_search(&h, budget)? == chi_by_search(g, budget)?
            }
        }
        ("k", Witness::NoHamiltonianCycle) => {
            n < 3 || matches!(is_hamiltonian(g, budget), Ok(None))
        }
        ("o", &Witness::Pair { u, v }) => {
            g.has_edge(u, v) && {
                let h = g.without_edge(u, v).expect("edge present");
                clique_number(&h.complement(), budget)?.0
                    == clique_number(&g.complement(), budget)?.0
            }
        }
        _ => false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn full(g: &Graph) -> PropertyReport {
        property_battery_with(
            g,
            &BatteryOptions {
                budget: Budget::UNLIMITED,
                full: true,
            },
        )
    }

    fn verdicts(r: &PropertyReport) -> String {
        r.conditions
            .iter()
            .chain([&r.edge_minimal])
            .map(|c| {
                format!(
                    "{}{}",
                    c.id,
                    if c.verdict == Verdict::Holds {
                        '+'
                    } else {
                        '-'
                    }
                )
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    fn all_witnesses_revalidate(g: &Graph, r: &PropertyReport) {
        for c in r.conditions.iter().chain([&r.edge_minimal]) {
            match c.verdict {
                Verdict::Fails => assert!(
                    revalidate(g, c, Budget::UNLIMITED).unwrap(),
                    "{} on {}",
                    c.id,
                    r.graph6
                ),
                _ => assert!(!revalidate(g, c, Budget::UNLIMITED).unwrap()),
            }
        }
    }

    // verdict strings are hand-computed
    #[test]
    fn k7() {
        let g = complete(7);
        let r = full(&g);
        assert!(r.excluded);
        assert_eq!(r.chromatic_number, Some(7));
        // K7: α = 1; complement empty so disconnected and without perfect matchings;
        // every edge deletion raises α to 2
        assert_eq!(
            verdicts(&r),
            "a+ i+ d- j+ m+ g+ f- l+ n- b+ e- pair_coloring- h+ c+ k+ o+"
        );
        all_witnesses_revalidate(&g, &r);
    }

    #[test]
    fn c5() {
        let g = cycle(5);
        let r = full(&g);
        assert_eq!(r.chromatic_number, Some(3));
        // δ = 2 < 3; non-adjacent pairs share one neighbour; ω = 2 ≥ 6/4;
        // C5 - v = P4 has a perfect matching, as does its complement (also P4)
        assert_eq!(
            verdicts(&r),
            "a+ i+ d+ j- m+ g+ f+ l+ n- b+ e+ pair_coloring+ h+ c+ k+ o+"
        );
        all_witnesses_revalidate(&g, &r);
    }

    #[test]
    fn complement_c7() {
        let g = cycle(7).complement();
        let r = full(&g);
        assert_eq!(r.chromatic_number, Some(4));
        // 4-regular, non-adjacent pairs (C7 neighbours) share 3 = (7-1)/2 neighbours;
        // ω = 3 ≥ 2; deleting edge 03 adds a chord of C7 that closes no triangle, so α stays 2
        assert_eq!(
            verdicts(&r),
            "a+ i+ d+ j+ m+ g+ f+ l+ n- b+ e+ pair_coloring+ h+ c+ k+ o-"
        );
        all_witnesses_revalidate(&g, &r);
    }

    #[test]
    fn k9_minus_matching() {
        // K9 minus {01, 23, 45, 67}: vertex 8 is adjacent to everything
        let g = [(0, 1), (2, 3), (4, 5), (6, 7)]
            .iter()
            .fold(complete(9), |g, &(u, v)| g.without_edge(u, v).unwrap());
        let r = full(&g);
        // χ = 5 (four pairs plus vertex 8), n = 9 = 2·5 - 1; complement is 4K2 + K1, disconnected;
        // complement - 8 = 4K2 has a perfect matching, complement - 0 does not;
        // deleting 0 keeps χ = 5, and deleting edge 02 keeps α = 2
        assert_eq!(r.chromatic_number, Some(5));
        assert_eq!(
            verdicts(&r),
            "a+ i+ d- j+ m+ g- f- l+ n- b+ e+ pair_coloring- h+ c- k+ o-"
        );
        all_witnesses_revalidate(&g, &r);
    }

    #[test]
    fn short_circuit() {
        let r = property_battery(&cycle(5), Budget::UNLIMITED);
        assert!(r.excluded);
        assert_eq!(r.verdict("j"), Some(Verdict::Fails));
        assert_eq!(r.verdict("n"), Some(Verdict::NotEvaluated));
        assert_eq!(r.verdict("o"), Some(Verdict::NotEvaluated));
        let r = property_battery(&cycle(6), Budget::UNLIMITED);
        assert_eq!(r.failed().map(|c| c.id).collect::<Vec<_>>(), vec!["a"]);
    }

    #[test]
    fn pair_coloring_is_proper() {
        let g = cycle(7).complement();
        for v in 0..7 {
            let c = pair_coloring(&g, v).unwrap();
            let (h, _) = g.remove_vertex(v).unwrap();
            assert!(c.is_proper(&h));
            assert_eq!(c.k(), 3);
            assert!((1..=3).all(|i| c.class(i).len() == 2));
        }
        assert!(pair_coloring(&complete(4), 0).is_none());
    }

    #[test]
    fn budget_skips_conditions() {
        let g = alpha_three_big();
        let r = property_battery_with(
            &g,
            &BatteryOptions {
                budget: Budget::nodes(1),
                full: true,
            },
        );
        assert!(r
            .conditions
            .iter()
            .any(|c| c.verdict == Verdict::SkippedBudget));
        assert_eq!(r.verdict("a"), Some(Verdict::Fails));
    }

    fn alpha_three_big() -> Graph {
        crate::graph::named::petersen()
    }
}
