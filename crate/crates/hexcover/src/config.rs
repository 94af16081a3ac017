//! Edge-labelled cycle configurations.
//!
//! A configuration assigns to every edge of a host graph an unordered pair of
//! distinct cycle labels, recording which two 6-cycles of an eventual double
//! cover pass through that edge. Labels are opaque integers. A configuration
//! on a non-cubic host is a partial object: open fragments of a label are
//! paths that later growth must extend and close into a 6-cycle, while a
//! closed fragment is a finished 6-cycle.
//!
//! [`validate_config`] checks every local and global rule a completable
//! configuration must satisfy, including forced-closure analysis: a label
//! whose single open fragment already has five edges can only be finished by
//! one specific edge, and that edge must be realizable without parallel
//! edges, label clashes, or cycles shorter than the requested girth floor.
//!
//! [`enumerate_seed_configs`] lists, up to host symmetry and label renaming,
//! all valid configurations of the seed graph of a girth class (a g-cycle
//! with a pendant edge at every cycle vertex), together with the degenerate
//! variants obtained by identifying pendant vertices with one another.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::canon::automorphism_group;
use crate::graph::{norm_edge, Graph};

/// Cycle label. Values are opaque; only equality matters.
pub type Label = u32;

/// Violations that make an edge labelling fail to be a configuration.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("edge ({0}, {1}) must carry two distinct labels")]
    RepeatedLabel(usize, usize),
    #[error("labelled edges do not match the host edge set")]
    EdgeSetMismatch,
    #[error("edges ({0}, {1}) and ({2}, {3}) share two labels")]
    SharedPair(usize, usize, usize, usize),
    #[error("vertex {0}: the three incident edges must pair exactly three labels, each twice")]
    VertexLabels(usize),
    #[error("vertex {0}: the two incident edges must share exactly one label")]
    MidVertexLabels(usize),
    #[error("label {0}: closed fragment has {1} edges instead of 6")]
    ClosedNotSix(Label, usize),
    #[error("label {0}: closed fragment coexists with further edges")]
    ClosedPlusExtra(Label),
    #[error("label {0}: {1} edges in {2} fragments cannot close into a single 6-cycle")]
    Overfull(Label, usize, usize),
    #[error("label {0}: forced closing edge ({1}, {2}) would duplicate a host edge")]
    ForcedParallel(Label, usize, usize),
    #[error("forced closing edge ({0}, {1}) cannot carry all labels forced onto it")]
    ForcedConflict(usize, usize),
    #[error("label {0}: forced closing edge ({1}, {2}) would create a cycle shorter than {3}")]
    ForcedShortCycle(Label, usize, usize, usize),
}

/// An assignment of an unordered pair of distinct labels to each edge of a
/// host graph. Edges and pairs are kept in normalized (sorted) form.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord)]
pub struct Config {
    pairs: BTreeMap<(usize, usize), (Label, Label)>,
}

impl Config {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a configuration from `(u, v, i, j)` rows.
    pub fn from_rows(
        rows: impl IntoIterator<Item = (usize, usize, Label, Label)>,
    ) -> Result<Self, ConfigError> {
        let mut cfg = Self::new();
        for (u, v, i, j) in rows {
            cfg.insert(u, v, i, j)?;
        }
        Ok(cfg)
    }

    /// Assigns the pair `{i, j}` to edge `{u, v}`, replacing any previous pair.
    pub fn insert(&mut self, u: usize, v: usize, i: Label, j: Label) -> Result<(), ConfigError> {
        if i == j {
            return Err(ConfigError::RepeatedLabel(u.min(v), u.max(v)));
        }
        self.pairs
            .insert(norm_edge(u, v), (i.min(j), i.max(j)));
        Ok(())
    }

    pub fn remove(&mut self, u: usize, v: usize) -> Option<(Label, Label)> {
        self.pairs.remove(&norm_edge(u, v))
    }

    pub fn get(&self, u: usize, v: usize) -> Option<(Label, Label)> {
        self.pairs.get(&norm_edge(u, v)).copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Edges with their label pairs, in sorted edge order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), (Label, Label))> + '_ {
        self.pairs.iter().map(|(&e, &p)| (e, p))
    }

    /// The sorted list of `(u, v, i, j)` rows.
    pub fn rows(&self) -> Vec<(usize, usize, Label, Label)> {
        self.iter().map(|((u, v), (i, j))| (u, v, i, j)).collect()
    }

    /// All labels that appear on at least one edge.
    pub fn labels(&self) -> BTreeSet<Label> {
        self.pairs
            .values()
            .flat_map(|&(i, j)| [i, j])
            .collect()
    }

    /// Edges carrying `label`, in sorted order.
    pub fn edges_of(&self, label: Label) -> Vec<(usize, usize)> {
        self.iter()
            .filter(|&(_, (i, j))| i == label || j == label)
            .map(|(e, _)| e)
            .collect()
    }

    /// The restriction to the given edge set (edges not present are skipped).
    pub fn restricted_to(&self, edges: &[(usize, usize)]) -> Config {
        let keep: BTreeSet<(usize, usize)> =
            edges.iter().map(|&(u, v)| norm_edge(u, v)).collect();
        Config {
            pairs: self
                .pairs
                .iter()
                .filter(|(e, _)| keep.contains(e))
                .map(|(&e, &p)| (e, p))
                .collect(),
        }
    }

    /// Applies a label mapping (must be injective on the labels present).
    pub fn map_labels(&self, f: impl Fn(Label) -> Label) -> Config {
        Config {
            pairs: self
                .pairs
                .iter()
                .map(|(&e, &(i, j))| {
                    let (a, b) = (f(i), f(j));
                    debug_assert_ne!(a, b);
                    (e, (a.min(b), a.max(b)))
                })
                .collect(),
        }
    }

    /// Applies a vertex permutation: `perm[old] = new`.
    pub fn relabel_vertices(&self, perm: &[usize]) -> Config {
        Config {
            pairs: self
                .pairs
                .iter()
                .map(|(&(u, v), &p)| (norm_edge(perm[u], perm[v]), p))
                .collect(),
        }
    }

    /// Renames labels to 0, 1, 2, … in order of first appearance over the
    /// sorted edge list. A display normalization only: the outcome depends
    /// on the within-pair order of equal-status labels, so it is not a
    /// canonical form (see [`Config::min_label_form`]).
    pub fn renumber_labels(&self) -> Config {
        let mut map: BTreeMap<Label, Label> = BTreeMap::new();
        for (_, (i, j)) in self.iter() {
            let next = map.len() as Label;
            map.entry(i).or_insert(next);
            let next = map.len() as Label;
            map.entry(j).or_insert(next);
        }
        self.map_labels(|l| map[&l])
    }

    /// The lexicographically least row list over all label bijections.
    ///
    /// Rows are scanned in sorted edge order; labels are assigned fresh
    /// numbers greedily. When an edge introduces two labels at once, either
    /// may take the smaller number, so all partial assignments achieving the
    /// minimal prefix are carried along.
    pub fn min_label_form(&self) -> Config {
        let mut cands: Vec<BTreeMap<Label, Label>> = vec![BTreeMap::new()];
        let mut out = Config::new();
        for ((u, v), (i, j)) in self.iter() {
            let mut best: Option<(Label, Label)> = None;
            let mut survivors: BTreeSet<BTreeMap<Label, Label>> = BTreeSet::new();
            for cand in &cands {
                let next = cand.len() as Label;
                let mut options: Vec<((Label, Label), BTreeMap<Label, Label>)> = Vec::new();
                match (cand.get(&i).copied(), cand.get(&j).copied()) {
                    (Some(a), Some(b)) => options.push(((a.min(b), a.max(b)), cand.clone())),
                    (Some(a), None) => {
                        let mut c = cand.clone();
                        c.insert(j, next);
                        options.push(((a.min(next), a.max(next)), c));
                    }
                    (None, Some(b)) => {
                        let mut c = cand.clone();
                        c.insert(i, next);
                        options.push(((b.min(next), b.max(next)), c));
                    }
                    (None, None) => {
                        let mut c1 = cand.clone();
                        c1.insert(i, next);
                        c1.insert(j, next + 1);
                        options.push(((next, next + 1), c1));
                        let mut c2 = cand.clone();
                        c2.insert(j, next);
                        c2.insert(i, next + 1);
                        options.push(((next, next + 1), c2));
                    }
                }
                for (row, c) in options {
                    if best.is_none_or(|b| row < b) {
                        best = Some(row);
                        survivors.clear();
                    }
                    if best == Some(row) {
                        survivors.insert(c);
                    }
                }
            }
            let (a, b) = best.expect("at least one candidate assignment survives");
            out.insert(u, v, a, b).unwrap();
            cands = survivors.into_iter().collect();
        }
        out
    }

    /// The least form of this configuration over all host automorphisms
    /// composed with label bijections. Two configurations are the same up to
    /// symmetry iff their canonical forms are equal.
    pub fn canonical_form(&self, host: &Graph) -> Config {
        let auts = automorphism_group(host, 1 << 20)
            .expect("automorphism group too large for configuration canonicalization");
        self.canonical_with(&auts)
    }

    fn canonical_with(&self, auts: &[Vec<usize>]) -> Config {
        auts.iter()
            .map(|perm| self.relabel_vertices(perm).min_label_form())
            .min()
            .expect("automorphism group is never empty")
    }
}

/// One connected piece of the subgraph formed by the edges of a single label.
///
/// Open fragments are paths, listed from the smaller endpoint; closed
/// fragments are cycles in the same normalized form used for cover cycles
/// (least vertex first, then its smaller neighbor).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Fragment {
    pub vertices: Vec<usize>,
    pub closed: bool,
}

impl Fragment {
    /// Number of edges in the fragment.
    pub fn len(&self) -> usize {
        if self.closed {
            self.vertices.len()
        } else {
            self.vertices.len() - 1
        }
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The two path endpoints, `None` for a closed fragment.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        if self.closed {
            None
        } else {
            Some((self.vertices[0], *self.vertices.last().unwrap()))
        }
    }
}

/// The fragments of one label, sorted. Assumes no vertex carries the label
/// on three or more edges (guaranteed for any labelling that passes the
/// per-vertex rules, and for restrictions of such labellings).
pub fn label_fragments(cfg: &Config, label: Label) -> Vec<Fragment> {
    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (u, v) in cfg.edges_of(label) {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }
    for nbrs in adj.values() {
        debug_assert!(nbrs.len() <= 2, "label {label} branches");
    }
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in adj.keys() {
        if seen.contains(&start) {
            continue;
        }
        let comp = component_of(&adj, start);
        let closed = comp.iter().all(|w| adj[w].len() == 2);
        // Walk from the least endpoint (open) or the least vertex's smaller
        // neighbor (closed), yielding a normalized vertex sequence.
        let first = if closed {
            *comp.iter().min().unwrap()
        } else {
            *comp
                .iter()
                .find(|w| adj[w].len() == 1)
                .expect("an open fragment has a degree-1 endpoint")
        };
        let mut vertices = vec![first];
        let mut prev = usize::MAX;
        let mut cur = first;
        loop {
            let next = adj[&cur]
                .iter()
                .copied()
                .filter(|&w| w != prev)
                .min();
            let Some(next) = next else { break };
            if next == first {
                break;
            }
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        seen.extend(comp);
        out.push(Fragment { vertices, closed });
    }
    out.sort();
    out
}

fn component_of(adj: &BTreeMap<usize, Vec<usize>>, start: usize) -> BTreeSet<usize> {
    let mut comp = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(u) = stack.pop() {
        for &w in &adj[&u] {
            if comp.insert(w) {
                stack.push(w);
            }
        }
    }
    comp
}

/// Fragments of every label present in the configuration.
pub fn all_fragments(cfg: &Config) -> BTreeMap<Label, Vec<Fragment>> {
    cfg.labels()
        .into_iter()
        .map(|l| (l, label_fragments(cfg, l)))
        .collect()
}

/// The first label whose fragment is a finished 6-cycle, if any.
pub fn complete_cycle_label(cfg: &Config) -> Option<Label> {
    cfg.labels()
        .into_iter()
        .find(|&l| label_fragments(cfg, l).iter().any(|f| f.closed))
}

/// Checks every rule a completable configuration must satisfy.
///
/// `girth_floor` is the smallest cycle length permitted in any graph that
/// completes this configuration; forced closing edges that would create a
/// shorter cycle are rejected. Values below 3 disable the girth check.
pub fn validate_config(host: &Graph, cfg: &Config, girth_floor: usize) -> Result<(), ConfigError> {
    // Every host edge labelled, and nothing else.
    let host_edges = host.edges();
    let cfg_edges: Vec<(usize, usize)> = cfg.iter().map(|(e, _)| e).collect();
    if host_edges != cfg_edges {
        return Err(ConfigError::EdgeSetMismatch);
    }

    // Per-vertex rules.
    for v in 0..host.n() {
        let inc: Vec<(usize, usize)> = host.neighbors(v).iter().map(|&w| norm_edge(v, w)).collect();
        for (a, &e1) in inc.iter().enumerate() {
            for &e2 in inc.iter().skip(a + 1) {
                if shared_labels(cfg, e1, e2).len() >= 2 {
                    return Err(ConfigError::SharedPair(e1.0, e1.1, e2.0, e2.1));
                }
            }
        }
        match inc.len() {
            3 => {
                let mut count: BTreeMap<Label, usize> = BTreeMap::new();
                for &e in &inc {
                    let (i, j) = cfg.get(e.0, e.1).unwrap();
                    *count.entry(i).or_insert(0) += 1;
                    *count.entry(j).or_insert(0) += 1;
                }
                if count.len() != 3 || count.values().any(|&c| c != 2) {
                    return Err(ConfigError::VertexLabels(v));
                }
            }
            2 => {
                if shared_labels(cfg, inc[0], inc[1]).len() != 1 {
                    return Err(ConfigError::MidVertexLabels(v));
                }
            }
            _ => {}
        }
    }

    // Per-label fragment shape rules.
    let frags = all_fragments(cfg);
    for (&label, parts) in &frags {
        let s: usize = parts.iter().map(Fragment::len).sum();
        if let Some(closed) = parts.iter().find(|f| f.closed) {
            if closed.len() != 6 {
                return Err(ConfigError::ClosedNotSix(label, closed.len()));
            }
            if parts.len() > 1 {
                return Err(ConfigError::ClosedPlusExtra(label));
            }
        } else if s + parts.len() > 6 {
            return Err(ConfigError::Overfull(label, s, parts.len()));
        }
    }

    // Forced closures: a label with a single open 5-edge fragment can only
    // be finished by the one edge joining its endpoints.
    let mut forced: BTreeMap<(usize, usize), Vec<Label>> = BTreeMap::new();
    for (&label, parts) in &frags {
        if parts.len() == 1 && !parts[0].closed && parts[0].len() == 5 {
            let (u, v) = parts[0].endpoints().unwrap();
            if host.has_edge(u, v) {
                return Err(ConfigError::ForcedParallel(label, u, v));
            }
            forced.entry(norm_edge(u, v)).or_default().push(label);
        }
    }
    for (&(u, v), labels) in &forced {
        if labels.len() > 2 {
            return Err(ConfigError::ForcedConflict(u, v));
        }
        if let [l1, l2] = labels[..] {
            // The closing edge carries both labels; at each endpoint the two
            // fragments must arrive on distinct edges, or the shared arrival
            // edge would share two labels with the closing edge.
            for w in [u, v] {
                if end_edge(cfg, l1, w) == end_edge(cfg, l2, w) {
                    return Err(ConfigError::ForcedConflict(u, v));
                }
            }
        }
        if girth_floor >= 3 {
            let d = host.dist(u, v).expect("fragment endpoints are connected");
            if d + 1 < girth_floor {
                return Err(ConfigError::ForcedShortCycle(labels[0], u, v, girth_floor));
            }
        }
    }
    Ok(())
}

fn shared_labels(cfg: &Config, e1: (usize, usize), e2: (usize, usize)) -> Vec<Label> {
    let (a, b) = cfg.get(e1.0, e1.1).unwrap();
    let (c, d) = cfg.get(e2.0, e2.1).unwrap();
    [a, b].into_iter().filter(|&l| l == c || l == d).collect()
}

/// The unique edge at `v` carrying `label` (callers ensure uniqueness).
fn end_edge(cfg: &Config, label: Label, v: usize) -> (usize, usize) {
    cfg.edges_of(label)
        .into_iter()
        .find(|&(u, w)| u == v || w == v)
        .expect("label is present at its fragment endpoint")
}

/// The seed graph of a girth class: a `g`-cycle on vertices `0..g` with a
/// pendant vertex `g + i` attached to each cycle vertex `i`.
pub fn seed_graph(g: usize) -> Graph {
    assert!(g >= 3, "seed graphs need a cycle of length at least 3");
    let mut edges = Vec::with_capacity(2 * g);
    for i in 0..g {
        edges.push((i, (i + 1) % g));
        edges.push((i, g + i));
    }
    Graph::from_edges(2 * g, &edges).expect("seed graph is simple and subcubic")
}

/// All valid configurations of `host`, one canonical representative per
/// orbit under host automorphisms composed with label renaming.
///
/// At a complete vertex the three incident edges pairwise share exactly one
/// label, and at a degree-2 vertex the one shared label links its two
/// edges, so the local transition structure carries no freedom at all. The
/// only choice is, per edge, which label slot at one endpoint lines up with
/// which at the other. Each choice vector yields a system of chains (the
/// would-be label fragments); closed chains must be six long and become
/// labels of their own, while open chains are grouped into labels in every
/// way that keeps co-labelled chains vertex-disjoint and within the length
/// budget. Every assignment passing `validate_config` arises this way.
pub fn enumerate_configs(host: &Graph, girth_floor: usize) -> Vec<Config> {
    let auts = automorphism_group(host, 1 << 20)
        .expect("automorphism group too large for configuration canonicalization");
    let edges: Vec<(usize, usize)> = host.edges();
    let index_of: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // cont[e][side][k]: where slot k of edge e continues at its side-th
    // endpoint (side 0 is the lesser endpoint): another edge, or a fragment
    // end. Slot k looks up position k at side 0 but position k XOR swap[e]
    // at side 1; the swap bit is the per-edge choice.
    let mut cont = vec![[[None::<usize>; 2]; 2]; edges.len()];
    for (ei, &(u, v)) in edges.iter().enumerate() {
        for (side, w) in [(0usize, u), (1usize, v)] {
            let others: Vec<usize> = host
                .neighbors(w)
                .iter()
                .map(|&x| index_of[&norm_edge(w, x)])
                .filter(|&fi| fi != ei)
                .collect();
            for (k, &fi) in others.iter().enumerate() {
                cont[ei][side][k] = Some(fi);
            }
        }
    }
    // A slot swap is only observable when both endpoints distinguish the
    // two slots; an endpoint of degree one ends both fragments either way.
    let free: Vec<usize> = (0..edges.len())
        .filter(|&ei| {
            let (u, v) = edges[ei];
            host.degree(u) >= 2 && host.degree(v) >= 2
        })
        .collect();
    assert!(free.len() < 30, "too many slot-correlation choices");
    let mut out: BTreeSet<Config> = BTreeSet::new();
    for mask in 0u32..(1 << free.len()) {
        let mut swap = vec![0u8; edges.len()];
        for (bit, &ei) in free.iter().enumerate() {
            swap[ei] = u8::from(mask >> bit & 1 == 1);
        }
        if let Some(chains) = trace_chains(&edges, &cont, &swap) {
            group_chains_into_labels(host, girth_floor, &edges, &chains, &auts, &mut out);
        }
    }
    out.into_iter().collect()
}

/// One maximal chain of slots linked by transitions: a would-be label
/// fragment.
struct Chain {
    /// The slots (edge index, slot index) along the chain, in path order.
    slots: Vec<(usize, usize)>,
    closed: bool,
    /// All endpoints of the chain's edges.
    vertices: BTreeSet<usize>,
}

/// The slot that continues slot `k` of edge `e` across endpoint side `s`,
/// if any.
fn slot_partner(
    edges: &[(usize, usize)],
    cont: &[[[Option<usize>; 2]; 2]],
    swap: &[u8],
    (e, k): (usize, usize),
    s: usize,
) -> Option<(usize, usize)> {
    let idx = if s == 0 { k } else { k ^ usize::from(swap[e]) };
    let f = cont[e][s][idx]?;
    let w = if s == 0 { edges[e].0 } else { edges[e].1 };
    let sf = usize::from(edges[f].0 != w);
    let j = (0..2)
        .find(|&j| {
            let jd = if sf == 0 { j } else { j ^ usize::from(swap[f]) };
            cont[f][sf][jd] == Some(e)
        })
        .expect("transitions are symmetric");
    Some((f, j))
}

/// Traces all chains of the given slot-correlation choice, or `None` when
/// some chain can never be part of a valid assignment: a chain that uses
/// both slots of one edge, a closed chain that is not six long, or an open
/// chain already too long for any label.
fn trace_chains(
    edges: &[(usize, usize)],
    cont: &[[[Option<usize>; 2]; 2]],
    swap: &[u8],
) -> Option<Vec<Chain>> {
    let mut seen = vec![[false; 2]; edges.len()];
    let mut chains = Vec::new();
    for e0 in 0..edges.len() {
        for k0 in 0..2 {
            if seen[e0][k0] {
                continue;
            }
            // Walk to one end of the chain (or around the whole cycle).
            let (mut e, mut k, mut back) = (e0, k0, 0usize);
            let mut closed = false;
            loop {
                match slot_partner(edges, cont, swap, (e, k), 1 - back) {
                    None => break,
                    Some((f, j)) if (f, j) == (e0, k0) => {
                        closed = true;
                        break;
                    }
                    Some((f, j)) => {
                        // Arrived at (f, j) across the endpoint shared with
                        // e; record which side that was to keep moving away
                        // from it.
                        let w = if 1 - back == 0 { edges[e].0 } else { edges[e].1 };
                        back = usize::from(edges[f].0 != w);
                        (e, k) = (f, j);
                    }
                }
            }
            // Collect the chain from this end, walking the other way.
            let (start, mut slots) = ((e, k), vec![(e, k)]);
            seen[e][k] = true;
            loop {
                match slot_partner(edges, cont, swap, (e, k), back) {
                    None => break,
                    Some((f, j)) => {
                        if (f, j) == start {
                            break;
                        }
                        let w = if back == 0 { edges[e].0 } else { edges[e].1 };
                        back = usize::from(edges[f].0 == w);
                        (e, k) = (f, j);
                        seen[e][k] = true;
                        slots.push((e, k));
                    }
                }
            }
            let mut used: BTreeSet<usize> = BTreeSet::new();
            if !slots.iter().all(|&(e, _)| used.insert(e)) {
                return None;
            }
            if closed && slots.len() != 6 {
                return None;
            }
            if !closed && slots.len() + 1 > 6 {
                return None;
            }
            let vertices = slots
                .iter()
                .flat_map(|&(e, _)| [edges[e].0, edges[e].1])
                .collect();
            chains.push(Chain {
                slots,
                closed,
                vertices,
            });
        }
    }
    Some(chains)
}

/// Groups the open chains of one chain system into labels in every valid
/// way and records each resulting assignment that passes full validation.
fn group_chains_into_labels(
    host: &Graph,
    girth_floor: usize,
    edges: &[(usize, usize)],
    chains: &[Chain],
    auts: &[Vec<usize>],
    out: &mut BTreeSet<Config>,
) {
    let open: Vec<usize> = (0..chains.len()).filter(|&c| !chains[c].closed).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    grow_groups(host, girth_floor, edges, chains, &open, 0, &mut groups, auts, out);
}

/// Extends a partial grouping of open chains chain by chain. A chain joins
/// an existing group only when it stays vertex-disjoint from the group and
/// the group's total length plus fragment count stays within six; opening a
/// fresh group is always allowed. Groups are created in first-chain order,
/// so each grouping is built exactly once.
#[allow(clippy::too_many_arguments)]
fn grow_groups(
    host: &Graph,
    girth_floor: usize,
    edges: &[(usize, usize)],
    chains: &[Chain],
    open: &[usize],
    next: usize,
    groups: &mut Vec<Vec<usize>>,
    auts: &[Vec<usize>],
    out: &mut BTreeSet<Config>,
) {
    if next == open.len() {
        if let Some(cfg) = assemble_config(edges, chains, groups) {
            if validate_config(host, &cfg, girth_floor).is_ok() {
                out.insert(cfg.canonical_with(auts));
            }
        }
        return;
    }
    let c = open[next];
    for g in 0..groups.len() {
        let total: usize = groups[g]
            .iter()
            .map(|&d| chains[d].slots.len() + 1)
            .sum::<usize>()
            + chains[c].slots.len()
            + 1;
        let disjoint = groups[g]
            .iter()
            .all(|&d| chains[d].vertices.is_disjoint(&chains[c].vertices));
        if total <= 6 && disjoint {
            groups[g].push(c);
            grow_groups(host, girth_floor, edges, chains, open, next + 1, groups, auts, out);
            groups[g].pop();
        }
    }
    groups.push(vec![c]);
    grow_groups(host, girth_floor, edges, chains, open, next + 1, groups, auts, out);
    groups.pop();
}

/// Builds the edge-label assignment determined by a chain system and a
/// grouping of its open chains: closed chains and groups become the labels.
fn assemble_config(
    edges: &[(usize, usize)],
    chains: &[Chain],
    groups: &[Vec<usize>],
) -> Option<Config> {
    let mut label_of = vec![Label::MAX; chains.len()];
    let mut next: Label = 0;
    for (c, chain) in chains.iter().enumerate() {
        if chain.closed {
            label_of[c] = next;
            next += 1;
        }
    }
    for group in groups {
        for &c in group {
            label_of[c] = next;
        }
        next += 1;
    }
    let mut pair: Vec<[Label; 2]> = vec![[Label::MAX; 2]; edges.len()];
    for (c, chain) in chains.iter().enumerate() {
        for &(e, k) in &chain.slots {
            pair[e][k] = label_of[c];
        }
    }
    let mut cfg = Config::new();
    for (e, &(u, v)) in edges.iter().enumerate() {
        let [i, j] = pair[e];
        if i == j {
            return None;
        }
        cfg.insert(u, v, i, j).ok()?;
    }
    Some(cfg)
}

/// A degenerate seed: some pendant vertices of the seed graph identified
/// with one another, when the quotient stays simple, subcubic, connected,
/// and of unchanged girth, and still admits at least one configuration.
#[derive(Debug, Clone)]
pub struct DegenerateSeed {
    /// `class_of[v]` maps each seed vertex to its quotient vertex.
    pub class_of: Vec<usize>,
    /// The identified pendant blocks (only blocks of size two or more).
    pub merged_blocks: Vec<Vec<usize>>,
    /// The quotient graph.
    pub host: Graph,
    /// Its configurations, canonical up to symmetry.
    pub configs: Vec<Config>,
}

/// The configurations of the girth-`g` seed graph, canonical up to symmetry,
/// plus any surviving degenerate pendant identifications.
#[derive(Debug, Clone)]
pub struct SeedConfigs {
    pub girth: usize,
    pub seed: Graph,
    pub proper: Vec<Config>,
    pub degenerate: Vec<DegenerateSeed>,
}

pub fn enumerate_seed_configs(g: usize) -> SeedConfigs {
    let seed = seed_graph(g);
    let proper = enumerate_configs(&seed, g);

    let pendants: Vec<usize> = (g..2 * g).collect();
    let mut degenerate: Vec<DegenerateSeed> = Vec::new();
    let mut seen_hosts: BTreeSet<String> = BTreeSet::new();
    for partition in set_partitions(&pendants) {
        if partition.iter().all(|b| b.len() == 1) {
            continue;
        }
        // Cycle vertices keep their identity; pendant blocks get classes in
        // order of their least member.
        let mut blocks = partition.clone();
        blocks.sort();
        let mut class_of = vec![usize::MAX; 2 * g];
        for (i, c) in class_of.iter_mut().enumerate().take(g) {
            *c = i;
        }
        for (k, block) in blocks.iter().enumerate() {
            for &p in block {
                class_of[p] = g + k;
            }
        }
        let Ok(host) = seed.quotient(&class_of) else {
            continue;
        };
        if !host.is_connected() || host.girth() != Some(g) {
            continue;
        }
        let cert = crate::canon::certificate(&host);
        if !seen_hosts.insert(cert) {
            continue;
        }
        let configs = enumerate_configs(&host, g);
        if configs.is_empty() {
            continue;
        }
        degenerate.push(DegenerateSeed {
            class_of,
            merged_blocks: blocks.into_iter().filter(|b| b.len() > 1).collect(),
            host,
            configs,
        });
    }
    SeedConfigs {
        girth: g,
        seed,
        proper,
        degenerate,
    }
}

/// All set partitions of `items`, each block sorted, blocks in insertion
/// order of their first element.
fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(items: &[usize], acc: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        let Some((&x, rest)) = items.split_first() else {
            out.push(acc.clone());
            return;
        };
        for i in 0..acc.len() {
            acc[i].push(x);
            rec(rest, acc, out);
            acc[i].pop();
        }
        acc.push(vec![x]);
        rec(rest, acc, out);
        acc.pop();
    }
    let mut out = Vec::new();
    rec(items, &mut Vec::new(), &mut out);
    out
}
