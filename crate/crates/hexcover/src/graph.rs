//! Simple undirected graphs of maximum degree 3.
//!
//! Every structure in this library (seeds, expansions, bases, generated
//! family members) is a graph of maximum degree 3, so the degree bound is
//! enforced at edge insertion. Vertices are `0..n`. Neighbor lists are kept
//! sorted, so two `Graph` values compare equal exactly when they are equal
//! as labeled graphs, and iteration order is deterministic everywhere.

use std::collections::BTreeSet;
use thiserror::Error;

/// Errors for graph construction and mutation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(usize, usize),
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("adding the edge would raise the degree of vertex {0} above 3")]
    DegreeExceeded(usize),
    #[error("vertex classes must be numbered 0..k without gaps (missing class {0})")]
    ClassGap(usize),
}

/// An undirected simple graph on vertices `0..n` with maximum degree 3.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Empty graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Graph on `n` vertices with the given edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Appends an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.adj.len() {
            Err(GraphError::VertexOutOfRange(v, self.adj.len()))
        } else {
            Ok(())
        }
    }

    /// Inserts the edge `u-v`.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        if self.adj[u].len() >= 3 {
            return Err(GraphError::DegreeExceeded(u));
        }
        if self.adj[v].len() >= 3 {
            return Err(GraphError::DegreeExceeded(v));
        }
        let iu = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(iu, v);
        let iv = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(iv, u);
        Ok(())
    }

    /// Removes the edge `u-v`.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        match (
            self.adj[u].binary_search(&v),
            self.adj[v].binary_search(&u),
        ) {
            (Ok(iu), Ok(iv)) => {
                self.adj[u].remove(iu);
                self.adj[v].remove(iv);
                Ok(())
            }
            _ => Err(GraphError::MissingEdge(u.min(v), u.max(v))),
        }
    }

    /// Whether the edge `u-v` is present.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Sum over vertices of `3 - degree`: the number of (vertex, missing
    /// edge slot) pairs still open under the degree-3 cap.
    pub fn deficiency(&self) -> usize {
        self.adj.iter().map(|a| 3 - a.len()).sum()
    }

    /// Vertices of degree strictly less than 3, ascending.
    pub fn deficient_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.degree(v) < 3).collect()
    }

    /// Whether every vertex has degree exactly 3.
    pub fn is_cubic(&self) -> bool {
        self.adj.iter().all(|a| a.len() == 3)
    }

    /// Breadth-first distance from `u` to `v`.
    pub fn dist(&self, u: usize, v: usize) -> Option<usize> {
        self.dist_avoiding(u, v, None)
    }

    /// Breadth-first distance from `u` to `v`, optionally forbidding the
    /// direct use of one edge.
    pub fn dist_avoiding(&self, u: usize, v: usize, skip: Option<(usize, usize)>) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = vec![false; self.n()];
        seen[u] = true;
        let mut frontier = vec![u];
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = Vec::new();
            for &x in &frontier {
                for &y in &self.adj[x] {
                    if let Some((a, b)) = skip {
                        if (x == a && y == b) || (x == b && y == a) {
                            continue;
                        }
                    }
                    if !seen[y] {
                        if y == v {
                            return Some(d);
                        }
                        seen[y] = true;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        None
    }

    /// Length of a shortest cycle, or `None` for a forest.
    ///
    /// For each edge `u-v`, the shortest cycle through that edge has length
    /// one more than the shortest `u`–`v` path that avoids the edge itself;
    /// the minimum over all edges is the girth.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for (u, v) in self.edges() {
            if let Some(d) = self.dist_avoiding(u, v, Some((u, v))) {
                let c = d + 1;
                if best.is_none_or(|b| c < b) {
                    best = Some(c);
                }
            }
        }
        best
    }

    /// Whether all vertices lie in one component (vacuously true for n = 0).
    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    /// The graph with vertex `v` renamed to `perm[v]`; `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph::new(self.n());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    g.add_edge(perm[u], perm[v]).expect("relabel of a valid graph");
                }
            }
        }
        g
    }

    /// Deletes a set of vertices, renumbering the rest downward while
    /// preserving relative order. Returns the new graph together with the
    /// old-id → new-id map (`None` for deleted vertices).
    pub fn remove_vertices(&self, remove: &BTreeSet<usize>) -> (Graph, Vec<Option<usize>>) {
        let mut map: Vec<Option<usize>> = Vec::with_capacity(self.n());
        let mut kept = 0;
        for v in 0..self.n() {
            if remove.contains(&v) {
                map.push(None);
            } else {
                map.push(Some(kept));
                kept += 1;
            }
        }
        let mut g = Graph::new(kept);
        for (u, v) in self.edges() {
            if let (Some(nu), Some(nv)) = (map[u], map[v]) {
                g.add_edge(nu, nv).expect("subgraph of a valid graph");
            }
        }
        (g, map)
    }

    /// Collapses vertices with equal class ids into one vertex per class.
    /// `class_of[v]` names the class of `v`; classes must be `0..k` with no
    /// gaps. Fails if an edge joins two vertices of one class (self-loop),
    /// if two edges collapse onto the same class pair (parallel edge), or if
    /// a class accumulates degree above 3.
    pub fn quotient(&self, class_of: &[usize]) -> Result<Graph, GraphError> {
        debug_assert_eq!(class_of.len(), self.n());
        let k = match class_of.iter().max() {
            Some(&m) => m + 1,
            None => 0,
        };
        let mut present = vec![false; k];
        for &c in class_of {
            present[c] = true;
        }
        if let Some(gap) = present.iter().position(|p| !p) {
            return Err(GraphError::ClassGap(gap));
        }
        let mut g = Graph::new(k);
        for (u, v) in self.edges() {
            let (cu, cv) = (class_of[u], class_of[v]);
            if cu == cv {
                return Err(GraphError::SelfLoop(cu));
            }
            g.add_edge(cu, cv)?;
        }
        Ok(g)
    }
}

/// Normalizes an edge to `(min, max)` order.
pub fn norm_edge(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}
