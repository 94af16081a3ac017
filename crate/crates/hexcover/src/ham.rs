//! Hamiltonian cycles and the path systems that carry them across
//! substitution.
//!
//! A Hamiltonian cycle of a completed host meets an embedded seed copy in a
//! set of vertex-disjoint paths (some of them single vertices the cycle only
//! brushes from outside). Substituting a larger piece for the copy preserves
//! Hamiltonicity exactly when the larger piece admits a matching system of
//! disjoint paths: same boundary attachment, jointly visiting every vertex.
//! This module finds cycles, extracts the path trace of a copy, and searches
//! for matching systems.

use crate::cycles::is_cycle;
use crate::graph::{norm_edge, Graph};
use std::collections::BTreeSet;

/// Every Hamiltonian cycle, in the same normalized form used for cover
/// cycles, sorted.
pub fn hamiltonian_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    enumerate(g, false, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Some Hamiltonian cycle, if one exists (first found in a deterministic
/// order; cheaper than full enumeration).
pub fn first_hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    enumerate(g, true, &mut out);
    out.pop()
}

/// The Hamiltonian cycle whose sorted edge list is lexicographically least,
/// the stored representative when several exist.
pub fn hamiltonian_cycle(g: &Graph) -> Option<Vec<usize>> {
    hamiltonian_cycles(g)
        .into_iter()
        .min_by_key(|c| sorted_edges(c))
}

fn sorted_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let mut es: Vec<(usize, usize)> = (0..cycle.len())
        .map(|i| norm_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    es.sort_unstable();
    es
}

/// Whether `cycle` is a spanning cycle of `g`.
pub fn is_hamiltonian_cycle(g: &Graph, cycle: &[usize]) -> bool {
    cycle.len() == g.n() && is_cycle(g, cycle)
}

fn enumerate(g: &Graph, stop_at_first: bool, out: &mut Vec<Vec<usize>>) {
    let n = g.n();
    if n < 3 {
        return;
    }
    // Path always starts at 0; forcing the second vertex below the last one
    // visits each cycle in exactly one orientation.
    let mut path = vec![0usize];
    let mut used = vec![false; n];
    used[0] = true;
    extend(g, &mut path, &mut used, stop_at_first, out);
}

fn extend(
    g: &Graph,
    path: &mut Vec<usize>,
    used: &mut Vec<bool>,
    stop_at_first: bool,
    out: &mut Vec<Vec<usize>>,
) -> bool {
    let last = *path.last().expect("path never empty");
    if path.len() == g.n() {
        if g.has_edge(last, 0) && path[1] < last {
            out.push(crate::cdc::normalize_cycle(path));
            return stop_at_first;
        }
        return false;
    }
    for &w in g.neighbors(last) {
        if !used[w] {
            used[w] = true;
            path.push(w);
            if extend(g, path, used, stop_at_first, out) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
    }
    false
}

/// The intersection of a host cycle with an embedded copy of `pattern`,
/// as vertex-disjoint paths in the pattern's own coordinates. Pattern
/// vertices the cycle visits using outside edges only appear as
/// single-vertex paths. Paths run from their smaller endpoint; the list is
/// sorted.
pub fn trace_paths(cycle: &[usize], pattern: &Graph, embedding: &[usize]) -> Vec<Vec<usize>> {
    let cyc_edges: BTreeSet<(usize, usize)> = (0..cycle.len())
        .map(|i| norm_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
        .collect();
    let n = pattern.n();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (a, b) in pattern.edges() {
        if cyc_edges.contains(&norm_edge(embedding[a], embedding[b])) {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for start in 0..n {
        if seen[start] || adj[start].len() > 1 {
            continue;
        }
        // Walk from an endpoint (or isolated vertex) to the far end.
        let mut path = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut at = start;
        while let Some(&next) = adj[at].iter().find(|&&w| w != prev) {
            prev = at;
            at = next;
            seen[at] = true;
            path.push(at);
        }
        if path.last() < path.first() {
            path.reverse();
        }
        paths.push(path);
    }
    assert!(
        seen.iter().all(|&s| s),
        "a host cycle closed inside the copy; seed copies cannot span one"
    );
    paths.sort();
    paths
}

/// One path the substituted piece must provide: where its two ends may
/// attach, mirroring one trace path of the copy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PathDemand {
    /// A single vertex the surrounding cycle crosses without using inside
    /// edges.
    Trivial(usize),
    /// A path with both endpoints fixed (a two-vertex boundary part whose
    /// counterpart was crossed from outside).
    Through(usize, usize),
    /// A path with one endpoint from each listed set.
    Open(Vec<usize>, Vec<usize>),
}

/// Searches for vertex-disjoint paths satisfying `demands` and jointly
/// visiting every vertex of `g`. Deterministic: demands are routed in
/// order, neighbors in sorted order; the first complete system is returned.
pub fn equivalent_path_system(g: &Graph, demands: &[PathDemand]) -> Option<Vec<Vec<usize>>> {
    let mut used = vec![false; g.n()];
    let mut system: Vec<Vec<usize>> = Vec::new();
    if route_demands(g, demands, &mut used, &mut system) {
        Some(system)
    } else {
        None
    }
}

fn route_demands(
    g: &Graph,
    demands: &[PathDemand],
    used: &mut Vec<bool>,
    system: &mut Vec<Vec<usize>>,
) -> bool {
    let Some(demand) = demands.first() else {
        return used.iter().all(|&u| u);
    };
    let rest = &demands[1..];
    match demand {
        PathDemand::Trivial(v) => {
            if used[*v] {
                return false;
            }
            used[*v] = true;
            system.push(vec![*v]);
            if route_demands(g, rest, used, system) {
                return true;
            }
            system.pop();
            used[*v] = false;
            false
        }
        PathDemand::Through(a, b) => try_route(g, &[*a], &[*b], rest, used, system),
        PathDemand::Open(ends_a, ends_b) => try_route(g, ends_a, ends_b, rest, used, system),
    }
}

fn try_route(
    g: &Graph,
    ends_a: &[usize],
    ends_b: &[usize],
    rest: &[PathDemand],
    used: &mut Vec<bool>,
    system: &mut Vec<Vec<usize>>,
) -> bool {
    for &a in ends_a {
        for &b in ends_b {
            if a == b || used[a] || used[b] {
                continue;
            }
            used[a] = true;
            let mut path = vec![a];
            if grow_route(g, b, rest, used, system, &mut path) {
                return true;
            }
            used[a] = false;
        }
    }
    false
}

fn grow_route(
    g: &Graph,
    target: usize,
    rest: &[PathDemand],
    used: &mut Vec<bool>,
    system: &mut Vec<Vec<usize>>,
    path: &mut Vec<usize>,
) -> bool {
    let at = *path.last().expect("route never empty");
    if at == target {
        system.push(path.clone());
        if route_demands(g, rest, used, system) {
            return true;
        }
        system.pop();
        return false;
    }
    for &w in g.neighbors(at) {
        if (w == target || !used[w]) && w != path[0] {
            used[w] = true;
            path.push(w);
            if grow_route(g, target, rest, used, system, path) {
                return true;
            }
            path.pop();
            used[w] = false;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (1, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
            ],
        )
        .unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    #[test]
    fn prism_has_three_hamiltonian_cycles_and_a_least_one() {
        let g = prism();
        let all = hamiltonian_cycles(&g);
        assert_eq!(all.len(), 3);
        for c in &all {
            assert!(is_hamiltonian_cycle(&g, c));
        }
        // Omitting each of the three rungs in turn gives the three cycles;
        // the least edge list starts (0,1),(0,2).
        let least = hamiltonian_cycle(&g).unwrap();
        assert_eq!(least, vec![0, 1, 4, 3, 5, 2]);
        assert_eq!(
            sorted_edges(&least),
            vec![(0, 1), (0, 2), (1, 4), (2, 5), (3, 4), (3, 5)]
        );
    }

    #[test]
    fn complete_graph_and_cycle_counts() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(hamiltonian_cycles(&k4).len(), 3);
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert_eq!(hamiltonian_cycles(&c6), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn petersen_is_not_hamiltonian() {
        assert_eq!(first_hamiltonian_cycle(&petersen()), None);
        assert!(hamiltonian_cycles(&petersen()).is_empty());
    }

    #[test]
    fn trace_of_the_named_prism_cycle_is_a_path_and_a_brushed_vertex() {
        // The seed sits in the prism identically; the cycle
        // 3-0-2-1-4-5 enters at one pendant, runs through the 3-cycle, and
        // leaves by another, crossing the last pendant entirely outside.
        let g = prism();
        let seed = crate::config::seed_graph(3);
        let cycle = vec![3, 0, 2, 1, 4, 5];
        assert!(is_hamiltonian_cycle(&g, &cycle));
        let embedding: Vec<usize> = (0..6).collect();
        let paths = trace_paths(&cycle, &seed, &embedding);
        assert_eq!(paths, vec![vec![3, 0, 2, 1, 4], vec![5]]);
    }

    #[test]
    fn path_system_mirrors_the_trace_inside_the_prism_itself() {
        let g = prism();
        let demands = [
            PathDemand::Open(vec![3], vec![4]),
            PathDemand::Trivial(5),
        ];
        let system = equivalent_path_system(&g, &demands).unwrap();
        assert_eq!(system.len(), 2);
        let mut visited: Vec<usize> = system.iter().flatten().copied().collect();
        visited.sort_unstable();
        assert_eq!(visited, (0..6).collect::<Vec<_>>());
        assert_eq!(system[0].first(), Some(&3));
        assert_eq!(system[0].last(), Some(&4));
        assert_eq!(system[1], vec![5]);
    }

    #[test]
    fn unsatisfiable_demands_return_none() {
        // In the bare seed, a path between two pendants strands the third:
        // it could only be covered as an endpoint, and both ends are taken.
        let seed = crate::config::seed_graph(3);
        assert_eq!(
            equivalent_path_system(&seed, &[PathDemand::Open(vec![3], vec![4])]),
            None
        );
        // Demanding the same vertex twice is contradictory.
        assert_eq!(
            equivalent_path_system(
                &prism(),
                &[PathDemand::Trivial(5), PathDemand::Through(5, 3)]
            ),
            None
        );
    }

    #[test]
    fn through_demand_routes_between_both_fixed_ends() {
        // Cube: a through path 0..6 plus a through path for the rest.
        let cube = Graph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 4),
                (0, 4),
                (1, 5),
                (2, 6),
                (3, 7),
            ],
        )
        .unwrap();
        let system = equivalent_path_system(
            &cube,
            &[PathDemand::Through(0, 6), PathDemand::Through(2, 4)],
        )
        .unwrap();
        let mut visited: Vec<usize> = system.iter().flatten().copied().collect();
        visited.sort_unstable();
        assert_eq!(visited, (0..8).collect::<Vec<_>>());
        // Antipodal corner pairs, by contrast, strand the off-path
        // neighbors: they would have to be path endpoints too.
        assert_eq!(
            equivalent_path_system(
                &cube,
                &[PathDemand::Through(0, 2), PathDemand::Through(5, 7)],
            ),
            None
        );
    }
}
