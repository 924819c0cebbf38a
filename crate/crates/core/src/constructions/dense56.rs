use super::{falsified, finish, is_k_s_dense, Construction, ConstructionError};
use crate::budget::{Budget, Meter};
use crate::graph::{bfs_tree, Bits, Graph};
use crate::immersion::{EdgePath, ImmersionCertificate};
use crate::solvers::{
    chain_between, chromatic_number, dominating_vertices, maximum_clique_mask, VertexColoring,
};

const NAME: &str = "dense56";

/// Strong immersion of K_χ in a (5,6)-dense graph.
///
/// Corners are one dominating vertex per colour of an optimal colouring,
/// chosen so that every two representatives lie in the same component of
/// their two-colour subgraph c_ij; each pair is then joined by an edge or a
/// shortest chain in c_ij. Chains of distinct colour pairs are edge-disjoint
/// and never pass through another corner.
pub fn construct_dense56_immersion(
    g: &Graph,
    budget: Budget,
) -> Result<Construction, ConstructionError> {
    let density = is_k_s_dense(g, 5, 6);
    if let Some(violating_set) = density.violating_set {
        return Err(ConstructionError::NotDense { violating_set });
    }
    let (k, coloring) = chromatic_number(g, budget)?;
    if g.n() < 5 {
        // below five vertices χ ≤ 4 forces a clique on χ vertices (χ = 4 only for K_4)
        let clique: Vec<usize> = Bits(maximum_clique_mask(g, budget)?).take(k).collect();
        if clique.len() < k {
            return Err(falsified(
                NAME,
                g,
                Some(&coloring),
                format!("no clique of size χ = {k} on fewer than 5 vertices"),
            ));
        }
        return finish(
            NAME,
            g,
            ImmersionCertificate::from_clique(&clique),
            Some(coloring),
        );
    }
    if let Some(i) = (1..=k).find(|&i| coloring.class_mask(i).count_ones() > 3) {
        return Err(falsified(
            NAME,
            g,
            Some(&coloring),
            format!("colour class {i} has more than 3 vertices"),
        ));
    }
    let mut candidates = Vec::with_capacity(k);
    for i in 1..=k {
        let d = dominating_vertices(g, &coloring, i).expect("colour in range");
        if d.is_empty() {
            return Err(falsified(
                NAME,
                g,
                Some(&coloring),
                format!("colour {i} has no dominating vertex"),
            ));
        }
        candidates.push(d);
    }
    let mut reps = Vec::with_capacity(k);
    let mut meter = budget.meter();
    if !choose(g, &coloring, &candidates, &mut reps, &mut meter)? {
        return Err(falsified(
            NAME,
            g,
            Some(&coloring),
            "no choice of dominating representatives is pairwise chain-connected",
        ));
    }
    let mut paths = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for a in 0..k {
        for b in a + 1..k {
            let path = if g.has_edge(reps[a], reps[b]) {
                vec![reps[a], reps[b]]
            } else {
                chain_between(g, &coloring, reps[a], reps[b])
                    .expect("representatives have distinct colours")
                    .ok_or_else(|| {
                        falsified(
                            NAME,
                            g,
                            Some(&coloring),
                            format!("no chain between {} and {}", reps[a], reps[b]),
                        )
                    })?
            };
            paths.push(EdgePath { edge: (a, b), path });
        }
    }
    let cert = ImmersionCertificate {
        pattern: crate::graph::named::complete(k),
        corners: reps,
        paths,
    };
    finish(NAME, g, cert, Some(coloring))
}

fn same_chain_component(g: &Graph, c: &VertexColoring, u: usize, v: usize) -> bool {
    let allowed = c.class_mask(c.color(u)) | c.class_mask(c.color(v));
    bfs_tree(g, u, allowed)[v].is_some()
}

/// Backtracking over at most three candidates per colour, lowest index first.
fn choose(
    g: &Graph,
    c: &VertexColoring,
    candidates: &[Vec<usize>],
    reps: &mut Vec<usize>,
    meter: &mut Meter,
) -> Result<bool, ConstructionError> {
    meter.tick()?;
    let i = reps.len();
    if i == candidates.len() {
        return Ok(true);
    }
    for &u in &candidates[i] {
        if reps.iter().all(|&r| same_chain_component(g, c, r, u)) {
            reps.push(u);
            if choose(g, c, candidates, reps, meter)? {
                return Ok(true);
            }
            reps.pop();
        }
    }
    Ok(false)
}
