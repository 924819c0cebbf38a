use super::{falsified, finish, Construction, ConstructionError};
use crate::graph::{named, Bits, Graph};
use crate::immersion::{EdgePath, ImmersionCertificate};
use crate::solvers::one_factorization;

const NAME: &str = "multipartite";

/// Order of the complete graph immersed by the construction: for equal
/// classes of size s, (k-1)s+1 when s is even, (k-1)s when s > 1 is odd and
/// k when s = 1; with unequal sizes, the sum of all classes but a largest.
pub fn multipartite_target_size(sizes: &[usize]) -> usize {
    let k = sizes.len();
    let largest = sizes.iter().copied().max().unwrap_or(0);
    let equal = sizes.iter().all(|&s| s == largest);
    let rest: usize = sizes.iter().sum::<usize>() - largest;
    if equal && (largest == 1 || largest % 2 == 0) {
        rest + 1
    } else if k == 0 {
        0
    } else {
        rest
    }
}

/// Builds the complete multipartite graph with the given class sizes
/// (classes laid out consecutively) and immerses K_t in it.
pub fn construct_multipartite_immersion(
    sizes: &[usize],
) -> Result<(Graph, Construction), ConstructionError> {
    if sizes.len() < 2 {
        return Err(ConstructionError::Precondition(format!(
            "need at least 2 classes, got {}",
            sizes.len()
        )));
    }
    if let Some(i) = sizes.iter().position(|&s| s == 0) {
        return Err(ConstructionError::Precondition(format!(
            "class {i} is empty"
        )));
    }
    if sizes.iter().sum::<usize>() > crate::graph::MAX_VERTICES {
        return Err(ConstructionError::Precondition(
            "too many vertices".to_string(),
        ));
    }
    let g = named::complete_multipartite(sizes);
    let mut classes = Vec::with_capacity(sizes.len());
    let mut next = 0;
    for &s in sizes {
        classes.push((next..next + s).collect::<Vec<_>>());
        next += s;
    }
    let c = multipartite_immersion_on(&g, &classes)?;
    Ok((g, c))
}

/// The classes of `g` if it is complete multipartite with at least two
/// classes (its complement is a disjoint union of cliques), ordered by
/// lowest vertex.
pub fn multipartite_classes(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let co = g.complement();
    let comps = co.components();
    if comps.len() < 2 || !comps.iter().all(|&c| co.is_clique(c)) {
        return None;
    }
    Some(comps.into_iter().map(|c| Bits(c).collect()).collect())
}

/// The routing on explicit classes of a complete multipartite `g`.
///
/// The reserved class U is a largest class (the last one among ties). All
/// other vertices are corners. Inside a corner class, the missing pairs are
/// edge-coloured by a 1-factorization of K_s (s colours if s is odd) and a
/// pair of colour i is routed through the i-th vertex of U. With all
/// classes equal and s even (or s = 1) one vertex of U is never used and
/// joins the corners: the highest-indexed such vertex.
pub fn multipartite_immersion_on(
    g: &Graph,
    classes: &[Vec<usize>],
) -> Result<Construction, ConstructionError> {
    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    if classes.len() < 2 || sizes.contains(&0) {
        return Err(ConstructionError::Precondition(
            "need at least 2 non-empty classes".to_string(),
        ));
    }
    let largest = *sizes.iter().max().expect("non-empty");
    let reserved = sizes
        .iter()
        .rposition(|&s| s == largest)
        .expect("non-empty");
    let u_class = &classes[reserved];

    let mut corners = Vec::new();
    let mut routed: Vec<((usize, usize), usize)> = Vec::new();
    let mut colors_needed = 0;
    for (ci, class) in classes.iter().enumerate() {
        if ci == reserved {
            continue;
        }
        let base = corners.len();
        corners.extend_from_slice(class);
        if class.len() < 2 {
            continue;
        }
        let f = one_factorization(class.len()).expect("class has ≥ 2 vertices");
        colors_needed = colors_needed.max(f.num_colors());
        for b in 1..class.len() {
            for a in 0..b {
                routed.push(((base + a, base + b), f.color(a, b)));
            }
        }
    }
    if colors_needed > u_class.len() {
        return Err(falsified(
            NAME,
            g,
            None,
            "reserved class smaller than the edge chromatic number",
        ));
    }
    let equal = sizes.iter().all(|&s| s == largest);
    if equal && u_class.len() > colors_needed {
        corners.push(*u_class.last().expect("non-empty"));
    }
    let t = corners.len();
    let mut paths = Vec::with_capacity(t * t.saturating_sub(1) / 2);
    let mut via = std::collections::HashMap::new();
    for &((a, b), color) in &routed {
        via.insert((a, b), u_class[color - 1]);
    }
    for b in 1..t {
        for a in 0..b {
            let path = match via.get(&(a, b)) {
                Some(&w) => vec![corners[a], w, corners[b]],
                None => vec![corners[a], corners[b]],
            };
            paths.push(EdgePath { edge: (a, b), path });
        }
    }
    let cert = ImmersionCertificate {
        pattern: named::complete(t),
        corners,
        paths,
    };
    finish(NAME, g, cert, None)
}
