//! Canonical labeling, isomorphism certificates, and automorphisms.
//!
//! The algorithm is individualization–refinement: starting from the degree
//! partition, cells are refined to equitability by neighbor counts; a
//! non-singleton target cell is then branched on, one vertex individualized
//! per child. Each discrete partition (leaf) yields a relabeling of the
//! graph; the certificate is the lexicographically least graph6 encoding
//! over all leaves, and pairs of leaves with equal encodings yield
//! automorphisms, which in turn prune branches whose subtrees are images of
//! explored ones under the group found so far.

use crate::graph::Graph;
use crate::graph6;
use std::collections::{BTreeMap, BTreeSet};

/// Result of canonical labeling.
#[derive(Debug, Clone)]
pub struct Canon {
    /// The canonical representative of the isomorphism class.
    pub form: Graph,
    /// graph6 encoding of `form`; equal across a class, distinct otherwise.
    pub cert: String,
    /// Relabeling onto the form: original vertex `v` becomes `to_canonical[v]`.
    pub to_canonical: Vec<usize>,
    /// Nontrivial automorphism generators, as permutations of the original
    /// labels. Together they generate the full automorphism group.
    pub aut_generators: Vec<Vec<usize>>,
}

/// Applies `perm` after `first`: returns the permutation `v ↦ perm[first[v]]`.
pub fn compose(perm: &[usize], first: &[usize]) -> Vec<usize> {
    first.iter().map(|&v| perm[v]).collect()
}

/// Inverse permutation.
pub fn invert(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (v, &img) in perm.iter().enumerate() {
        inv[img] = v;
    }
    inv
}

fn is_identity(perm: &[usize]) -> bool {
    perm.iter().enumerate().all(|(i, &p)| i == p)
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Extra leaf bytes appended (after a 0 separator) to the graph6
    /// encoding before comparison; lets callers canonicalize a graph
    /// together with attached structure in one search.
    annotate: Option<&'a dyn Fn(&[usize]) -> Vec<u8>>,
    best: Option<(Vec<u8>, Vec<usize>)>,
    auts: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    /// Refines `cells` to an equitable partition: every vertex of a cell has
    /// the same number of neighbors in every cell. Splits order groups by
    /// ascending neighbor count, which is isomorphism-invariant.
    fn refine(&self, cells: &mut Vec<Vec<usize>>) {
        loop {
            let mut split = None;
            'scan: for s in 0..cells.len() {
                let mut in_s = vec![false; self.n];
                for &v in &cells[s] {
                    in_s[v] = true;
                }
                for c in 0..cells.len() {
                    if cells[c].len() <= 1 {
                        continue;
                    }
                    let mut by_count: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                    for &v in &cells[c] {
                        let k = self.g.neighbors(v).iter().filter(|&&w| in_s[w]).count();
                        by_count.entry(k).or_default().push(v);
                    }
                    if by_count.len() > 1 {
                        split = Some((c, by_count.into_values().collect::<Vec<_>>()));
                        break 'scan;
                    }
                }
            }
            match split {
                Some((c, groups)) => {
                    cells.splice(c..=c, groups);
                }
                None => break,
            }
        }
    }

    fn descend(&mut self, mut cells: Vec<Vec<usize>>, fixed: &mut Vec<usize>) {
        self.refine(&mut cells);
        let target = cells.iter().position(|c| c.len() > 1);
        match target {
            None => self.record_leaf(&cells),
            Some(ci) => {
                let candidates = cells[ci].clone();
                let mut tried_roots: BTreeSet<usize> = BTreeSet::new();
                for &v in &candidates {
                    let root = self.prefix_orbit_root(v, &candidates, fixed);
                    if !tried_roots.insert(root) {
                        continue;
                    }
                    let mut child = cells.clone();
                    let rest: Vec<usize> =
                        child[ci].iter().copied().filter(|&w| w != v).collect();
                    child.splice(ci..=ci, [vec![v], rest]);
                    fixed.push(v);
                    self.descend(child, fixed);
                    fixed.pop();
                }
            }
        }
    }

    /// Orbit representative of `v` among `candidates` under the subgroup of
    /// recorded automorphisms that fix every vertex in `fixed`.
    fn prefix_orbit_root(&self, v: usize, candidates: &[usize], fixed: &[usize]) -> usize {
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for gamma in &self.auts {
            if fixed.iter().any(|&f| gamma[f] != f) {
                continue;
            }
            for w in 0..self.n {
                let (a, b) = (find(&mut uf, w), find(&mut uf, gamma[w]));
                if a != b {
                    uf[a.max(b)] = a.min(b);
                }
            }
        }
        // Canonicalize to the least candidate in the orbit.
        let r = find(&mut uf, v);
        candidates
            .iter()
            .copied()
            .filter(|&c| find(&mut uf, c) == r)
            .min()
            .unwrap_or(v)
    }

    fn record_leaf(&mut self, cells: &[Vec<usize>]) {
        let mut perm = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            perm[cell[0]] = pos;
        }
        let relabeled = self.g.relabel(&perm);
        let mut bytes = graph6::encode(&relabeled)
            .expect("canonical labeling inputs fit in graph6")
            .into_bytes();
        if let Some(annotate) = self.annotate {
            // graph6 is printable ASCII, so 0 is an unambiguous separator.
            bytes.push(0);
            bytes.extend(annotate(&perm));
        }
        match &self.best {
            Some((best_bytes, best_perm)) => {
                if bytes < *best_bytes {
                    self.best = Some((bytes, perm));
                } else if bytes == *best_bytes {
                    // best_perm^{-1} ∘ perm is an automorphism.
                    let gamma = compose(&invert(best_perm), &perm);
                    if !is_identity(&gamma) && !self.auts.contains(&gamma) {
                        self.auts.push(gamma);
                    }
                }
            }
            None => self.best = Some((bytes, perm)),
        }
    }
}

/// Computes the canonical form, certificate, relabeling, and automorphism
/// generators of `g`.
pub fn canon(g: &Graph) -> Canon {
    let n = g.n();
    let mut search = Search {
        g,
        n,
        annotate: None,
        best: None,
        auts: Vec::new(),
    };
    // Initial partition: by degree, ascending. Isomorphism-invariant.
    let mut by_degree: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_degree.entry(g.degree(v)).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_degree.into_values().collect();
    let mut fixed = Vec::new();
    search.descend(cells, &mut fixed);
    let (bytes, perm) = search.best.expect("at least one leaf");
    Canon {
        form: g.relabel(&perm),
        cert: String::from_utf8(bytes).expect("graph6 is ASCII"),
        to_canonical: perm,
        aut_generators: search.auts,
    }
}

/// Canonicalizes a graph together with attached structure in one search.
///
/// `colors` is any vertex classification that isomorphisms of the attached
/// structure must respect; it seeds the initial partition, so it must be
/// derivable from the structure itself (never from vertex identities).
/// `annotate` renders the structure under a candidate relabeling; the
/// returned bytes are the least `graph6 ++ 0 ++ annotation` over all
/// canonical-search leaves, alongside the relabeling that attains it. Ties
/// in the full byte string are automorphisms of the annotated graph and
/// prune the search exactly like plain graph automorphisms.
pub fn canon_annotated(
    g: &Graph,
    colors: &[u64],
    annotate: &dyn Fn(&[usize]) -> Vec<u8>,
) -> (Vec<u8>, Vec<usize>) {
    let n = g.n();
    assert_eq!(colors.len(), n, "one color per vertex");
    let mut search = Search {
        g,
        n,
        annotate: Some(annotate),
        best: None,
        auts: Vec::new(),
    };
    // Initial partition: by (color, degree), ascending; the key order makes
    // the cell layout itself isomorphism-invariant.
    let mut by_class: BTreeMap<(u64, usize), Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        by_class.entry((colors[v], g.degree(v))).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = by_class.into_values().collect();
    let mut fixed = Vec::new();
    search.descend(cells, &mut fixed);
    search.best.expect("at least one leaf")
}

/// Isomorphism certificate: the graph6 encoding of the canonical form.
pub fn certificate(g: &Graph) -> String {
    canon(g).cert
}

/// Whether two graphs are isomorphic.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && certificate(a) == certificate(b)
}

/// Vertex orbits under the automorphism group: `orbits[v]` is the least
/// vertex in the orbit of `v`.
pub fn vertex_orbits(g: &Graph) -> Vec<usize> {
    let gens = canon(g).aut_generators;
    orbits_under(g.n(), &gens)
}

/// Orbits of `0..n` under a set of permutations: least element per orbit.
pub fn orbits_under(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut Vec<usize>, mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }
    for gamma in gens {
        for v in 0..n {
            let (a, b) = (find(&mut uf, v), find(&mut uf, gamma[v]));
            if a != b {
                uf[a.max(b)] = a.min(b);
            }
        }
    }
    (0..n).map(|v| find(&mut uf, v)).collect()
}

/// The full automorphism group as an explicit list, by breadth-first
/// closure over the generators. Returns `None` if the group exceeds `cap`
/// elements.
pub fn automorphism_group(g: &Graph, cap: usize) -> Option<Vec<Vec<usize>>> {
    let gens = canon(g).aut_generators;
    let n = g.n();
    let identity: Vec<usize> = (0..n).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while let Some(p) = frontier.pop() {
        for gamma in &gens {
            let q = compose(gamma, &p);
            if seen.insert(q.clone()) {
                if seen.len() > cap {
                    return None;
                }
                frontier.push(q);
            }
        }
    }
    Some(seen.into_iter().collect())
}

/// Order of the automorphism group; `None` if it exceeds `cap`.
pub fn aut_group_order(g: &Graph, cap: usize) -> Option<u128> {
    automorphism_group(g, cap).map(|els| els.len() as u128)
}
