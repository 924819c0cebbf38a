use crate::budget::{Budget, BudgetExceeded, Meter};
use crate::graph::{Bits, Graph};

/// ω(G) with a maximum clique (vertices ascending) as witness.
pub fn clique_number(g: &Graph, budget: Budget) -> Result<(usize, Vec<usize>), BudgetExceeded> {
    let mask = maximum_clique_mask(g, budget)?;
    Ok((mask.count_ones() as usize, Bits(mask).collect()))
}

/// α(G) with a maximum independent set as witness; ω of the complement.
pub fn independence_number(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, Vec<usize>), BudgetExceeded> {
    clique_number(&g.complement(), budget)
}

pub fn maximum_clique_mask(g: &Graph, budget: Budget) -> Result<u64, BudgetExceeded> {
    let mut meter = budget.meter();
    max_clique_in(g, g.vertex_mask(), &mut meter)
}

/// Maximum clique inside `candidates`, using greedy colour classes as the
/// pruning bound.
pub(crate) fn max_clique_in(
    g: &Graph,
    candidates: u64,
    meter: &mut Meter,
) -> Result<u64, BudgetExceeded> {
    let mut best = 0u64;
    expand(g, 0, candidates, &mut best, meter)?;
    Ok(best)
}

fn expand(
    g: &Graph,
    current: u64,
    mut candidates: u64,
    best: &mut u64,
    meter: &mut Meter,
) -> Result<(), BudgetExceeded> {
    meter.tick()?;
    if candidates == 0 {
        if current.count_ones() > best.count_ones() {
            *best = current;
        }
        return Ok(());
    }
    // colour classes of the candidates, lowest index first
    let mut order = Vec::with_capacity(candidates.count_ones() as usize);
    let mut uncolored = candidates;
    let mut color = 0u32;
    while uncolored != 0 {
        color += 1;
        let mut free = uncolored;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= !(1 << v) & !g.neighbor_mask(v);
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    let size = current.count_ones();
    for &(v, bound) in order.iter().rev() {
        if size + bound <= best.count_ones() {
            return Ok(());
        }
        expand(
            g,
            current | (1 << v),
            candidates & g.neighbor_mask(v),
            best,
            meter,
        )?;
        candidates &= !(1 << v);
    }
    Ok(())
}
