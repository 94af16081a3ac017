//! Subgraph embedding search.
//!
//! An embedding of a pattern `H` into a host `G` is an injective map
//! `φ : V(H) → V(G)` carrying edges to edges. The search maps pattern
//! vertices one at a time in a connectivity-first order, so each new vertex
//! is usually constrained to the neighborhood of an already-placed one.

use crate::graph::Graph;
use std::ops::ControlFlow;

/// Visits every embedding of `pattern` into `host`, passing the map
/// (`image[pattern_vertex] = host_vertex`) to `visit`. Stops early if
/// `visit` breaks. When `induced` is set, non-adjacent pattern vertices must
/// also map to non-adjacent host vertices.
pub fn for_each_embedding<F>(host: &Graph, pattern: &Graph, induced: bool, mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let np = pattern.n();
    if np > host.n() {
        return;
    }
    // Order pattern vertices: repeatedly take the unplaced vertex with the
    // most placed neighbors, breaking ties by degree then id. Connected
    // patterns then always extend along an edge after the first vertex.
    let mut order: Vec<usize> = Vec::with_capacity(np);
    let mut placed = vec![false; np];
    for _ in 0..np {
        let next = (0..np)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let anchored = pattern.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (anchored, pattern.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; np];
    let mut used = vec![false; host.n()];
    let _ = place(host, pattern, induced, &order, 0, &mut image, &mut used, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn place<F>(
    host: &Graph,
    pattern: &Graph,
    induced: bool,
    order: &[usize],
    depth: usize,
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if depth == order.len() {
        return visit(image);
    }
    let u = order[depth];
    // Candidates: neighbors of some placed neighbor, else all hosts.
    let anchor = pattern
        .neighbors(u)
        .iter()
        .copied()
        .find(|&w| image[w] != usize::MAX);
    let candidates: Vec<usize> = match anchor {
        Some(w) => host.neighbors(image[w]).to_vec(),
        None => (0..host.n()).collect(),
    };
    'cand: for &c in &candidates {
        if used[c] || host.degree(c) < pattern.degree(u) {
            continue;
        }
        for &w in pattern.neighbors(u) {
            if image[w] != usize::MAX && !host.has_edge(c, image[w]) {
                continue 'cand;
            }
        }
        if induced {
            for w in 0..pattern.n() {
                if image[w] != usize::MAX
                    && !pattern.has_edge(u, w)
                    && host.has_edge(c, image[w])
                {
                    continue 'cand;
                }
            }
        }
        image[u] = c;
        used[c] = true;
        let flow = place(host, pattern, induced, order, depth + 1, image, used, visit);
        image[u] = usize::MAX;
        used[c] = false;
        flow?;
    }
    ControlFlow::Continue(())
}

/// All embeddings of `pattern` into `host`.
pub fn embeddings(host: &Graph, pattern: &Graph, induced: bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding(host, pattern, induced, |img| {
        out.push(img.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Whether at least one embedding exists.
pub fn has_embedding(host: &Graph, pattern: &Graph, induced: bool) -> bool {
    let mut found = false;
    for_each_embedding(host, pattern, induced, |_| {
        found = true;
        ControlFlow::Break(())
    });
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn triangle() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap()
    }

    fn prism() -> Graph {
        Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn cube() -> Graph {
        Graph::from_edges(
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
        .unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::from_edges(10, &e).unwrap()
    }

    fn cycle(k: usize) -> Graph {
        let e: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_edges(k, &e).unwrap()
    }

    #[test]
    fn triangles_in_prism() {
        // Two triangles, each hit by 3! = 6 maps: 12 embeddings.
        assert_eq!(embeddings(&prism(), &triangle(), false).len(), 12);
        // Every triangle in the prism is induced.
        assert_eq!(embeddings(&prism(), &triangle(), true).len(), 12);
    }

    #[test]
    fn no_triangles_in_bipartite_hosts() {
        assert!(!has_embedding(&cube(), &triangle(), false));
        assert!(!has_embedding(&petersen(), &triangle(), false));
    }

    #[test]
    fn cycles_as_patterns_match_cycle_listing() {
        // Each k-cycle subgraph is hit by 2k embeddings (rotations and
        // reflections), so counts must agree with the cycle enumerator.
        for (host, k) in [(prism(), 6usize), (cube(), 4), (cube(), 6), (petersen(), 5)] {
            let copies = crate::cycles::cycles_of_length(&host, k).len();
            assert_eq!(
                embeddings(&host, &cycle(k), false).len(),
                copies * 2 * k,
                "k = {k}"
            );
        }
    }

    #[test]
    fn self_embeddings_are_automorphisms() {
        // The embeddings of a graph into itself are exactly its
        // automorphisms, so the count must match the group order.
        let p = petersen();
        assert_eq!(embeddings(&p, &p, false).len(), 120);
        let pr = prism();
        assert_eq!(embeddings(&pr, &pr, false).len(), 12);
    }

    #[test]
    fn induced_versus_not() {
        // A path on three vertices in the triangle: six non-induced
        // embeddings, zero induced (the endpoints are always adjacent).
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(embeddings(&triangle(), &p3, false).len(), 6);
        assert_eq!(embeddings(&triangle(), &p3, true).len(), 0);
        // C_4 into the cube: six square faces, each 8 ways; all induced.
        assert_eq!(embeddings(&cube(), &cycle(4), false).len(), 48);
        assert_eq!(embeddings(&cube(), &cycle(4), true).len(), 48);
        // C_6 into the cube: sixteen hexagons, but only the four equators
        // (antipodal-pair complements) are induced.
        assert_eq!(embeddings(&cube(), &cycle(6), true).len(), 4 * 12);
    }

    #[test]
    fn disconnected_pattern() {
        // Two disjoint edges into C_4: pick two host edges that do not
        // share a vertex (two ways: the two opposite pairs), each with
        // 2 × 2 × 2 = 8 orientations/assignments.
        let m2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(embeddings(&cycle(4), &m2, false).len(), 16);
    }

    #[test]
    fn early_stop() {
        let mut calls = 0;
        for_each_embedding(&petersen(), &cycle(5), false, |_| {
            calls += 1;
            ControlFlow::Break(())
        });
        assert_eq!(calls, 1);
    }

    #[test]
    fn embedding_maps_preserve_edges() {
        let host = petersen();
        let pat = cycle(6);
        for img in embeddings(&host, &pat, false) {
            for (u, v) in pat.edges() {
                assert!(host.has_edge(img[u], img[v]));
            }
            let mut sorted = img.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), pat.n());
        }
    }
}
