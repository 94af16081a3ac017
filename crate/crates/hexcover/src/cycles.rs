//! Enumeration of cycles of a fixed length.
//!
//! A cycle of length `k` is reported once, as the vertex sequence starting
//! at its least vertex and continuing toward the smaller of that vertex's
//! two cycle neighbors, so the listing is duplicate-free and deterministic.

use crate::graph::{norm_edge, Graph};
use std::collections::BTreeSet;

/// All cycles of length exactly `k` in `g`, each as a canonical vertex
/// sequence (least vertex first, lesser neighbor second).
pub fn cycles_of_length(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k < 3 || g.n() < k {
        return out;
    }
    let mut path = Vec::with_capacity(k);
    let mut used = vec![false; g.n()];
    for root in 0..g.n() {
        path.push(root);
        used[root] = true;
        extend(g, k, root, &mut path, &mut used, &mut out);
        used[root] = false;
        path.pop();
    }
    out
}

fn extend(
    g: &Graph,
    k: usize,
    root: usize,
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    if path.len() == k {
        // Close the cycle; report only the direction where the second
        // vertex is smaller than the last.
        if g.has_edge(last, root) && path[1] < path[k - 1] {
            out.push(path.clone());
        }
        return;
    }
    for &next in g.neighbors(last) {
        // All non-root cycle vertices must exceed the root, which makes the
        // root the least vertex of every cycle reported from it.
        if next > root && !used[next] {
            used[next] = true;
            path.push(next);
            extend(g, k, root, path, used, out);
            path.pop();
            used[next] = false;
        }
    }
}

/// All 6-cycles of `g`.
pub fn hexagons(g: &Graph) -> Vec<Vec<usize>> {
    cycles_of_length(g, 6)
}

/// The edge set of a cycle given as a vertex sequence.
pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    (0..cycle.len())
        .map(|i| norm_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect()
}

/// Whether a vertex sequence is a cycle of `g`: distinct vertices, each
/// consecutive pair (cyclically) adjacent.
pub fn is_cycle(g: &Graph, cycle: &[usize]) -> bool {
    if cycle.len() < 3 {
        return false;
    }
    let distinct: BTreeSet<usize> = cycle.iter().copied().collect();
    distinct.len() == cycle.len()
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}
