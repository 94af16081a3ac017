//! Equivalence of cycle configurations across hosts, and self-similarity.
//!
//! Two configurations are equivalent when the deficient vertices of the
//! second host can be partitioned into parts matched one-to-one with the
//! deficient vertices of the first host (which must all have degree 1), so
//! that matched sides carry the same deficiency, the two open labels passing
//! through matched sides correspond under a single global label bijection,
//! and corresponding labels have open fragments of equal length at the
//! matched endpoints.
//!
//! A part is either one degree-1 vertex, or two degree-2 vertices joined by
//! a connector: a label open at both, whose fragment runs exactly between
//! them, standing for the one future edge that will complete both vertices.
//!
//! A configured host is self-similar with respect to a configured seed when
//! its configuration is equivalent to the seed's and every embedded copy of
//! the seed graph inside it carries (by restriction) a configuration
//! equivalent to the seed's. Copies whose restricted configuration contains
//! a finished 6-cycle can be exempted from the copy condition, which is the
//! special allowance used by the girth-6 streams.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use crate::config::{all_fragments, complete_cycle_label, Config, Fragment, Label};
use crate::graph::{norm_edge, Graph};
use crate::subiso::for_each_embedding;

/// A witness that two configurations are equivalent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryCorrespondence {
    /// One entry per deficient vertex of the first host: that vertex and the
    /// matched part (one or two vertices) of the second host.
    pub parts: Vec<(usize, Vec<usize>)>,
    /// The global bijection from the first configuration's open labels onto
    /// the second's through-labels (connectors are not in its image).
    pub label_map: BTreeMap<Label, Label>,
}

/// A candidate part on the second host: its vertices and the two labels
/// passing through it, each tagged with the endpoint where it stops.
#[derive(Debug, Clone)]
struct Part {
    vertices: Vec<usize>,
    through: [(Label, usize); 2],
}

/// The open fragment of `label` ending at `v`, if any.
fn fragment_at<'f>(
    frags: &'f BTreeMap<Label, Vec<Fragment>>,
    label: Label,
    v: usize,
) -> Option<&'f Fragment> {
    frags.get(&label)?.iter().find(|f| {
        f.endpoints()
            .is_some_and(|(a, b)| a == v || b == v)
    })
}

/// The two labels appearing exactly once at a degree-2 vertex (its edges
/// must share exactly one label, the one passing through).
fn open_labels_at(host: &Graph, cfg: &Config, w: usize) -> Option<[Label; 2]> {
    let nbrs = host.neighbors(w);
    let (i1, j1) = cfg.get(w, nbrs[0])?;
    let (i2, j2) = cfg.get(w, nbrs[1])?;
    let first = [i1, j1];
    let second = [i2, j2];
    let shared: Vec<Label> = first.iter().copied().filter(|l| second.contains(l)).collect();
    if shared.len() != 1 {
        return None;
    }
    let a = first.into_iter().find(|&l| l != shared[0])?;
    let b = second.into_iter().find(|&l| l != shared[0])?;
    Some([a, b])
}

fn singleton_part(host: &Graph, cfg: &Config, w: usize) -> Option<Part> {
    let (i, j) = cfg.get(w, host.neighbors(w)[0])?;
    Some(Part {
        vertices: vec![w],
        through: [(i, w), (j, w)],
    })
}

fn pair_part(
    host: &Graph,
    cfg: &Config,
    frags: &BTreeMap<Label, Vec<Fragment>>,
    w1: usize,
    w2: usize,
) -> Option<Part> {
    let open1 = open_labels_at(host, cfg, w1)?;
    let open2 = open_labels_at(host, cfg, w2)?;
    let common: Vec<Label> = open1.iter().copied().filter(|l| open2.contains(l)).collect();
    let [connector] = common[..] else { return None };
    let span = fragment_at(frags, connector, w1)?;
    let (a, b) = span.endpoints()?;
    if norm_edge(a, b) != norm_edge(w1, w2) {
        return None;
    }
    let t1 = open1.into_iter().find(|&l| l != connector)?;
    let t2 = open2.into_iter().find(|&l| l != connector)?;
    let mut through = [(t1, w1), (t2, w2)];
    through.sort_unstable();
    Some(Part {
        vertices: vec![w1.min(w2), w1.max(w2)],
        through,
    })
}

/// Finds a boundary correspondence making `cfg1` on `h1` equivalent to
/// `cfg2` on `h2`, or `None`. The first host plays the seed-side role: all
/// its deficient vertices must have degree 1.
pub fn configs_equivalent(
    h1: &Graph,
    cfg1: &Config,
    h2: &Graph,
    cfg2: &Config,
) -> Option<BoundaryCorrespondence> {
    let leaves = h1.deficient_vertices();
    if leaves.is_empty() || leaves.iter().any(|&v| h1.degree(v) != 1) {
        return None;
    }
    let mut ones: Vec<usize> = Vec::new();
    let mut twos: Vec<usize> = Vec::new();
    for w in h2.deficient_vertices() {
        match h2.degree(w) {
            1 => ones.push(w),
            2 => twos.push(w),
            _ => return None,
        }
    }
    if twos.len() % 2 != 0 || leaves.len() != ones.len() + twos.len() / 2 {
        return None;
    }

    let frags1 = all_fragments(cfg1);
    let frags2 = all_fragments(cfg2);

    let mut candidates: Vec<Part> = Vec::new();
    for &w in &ones {
        candidates.push(singleton_part(h2, cfg2, w)?);
    }
    for (a, &w1) in twos.iter().enumerate() {
        for &w2 in twos.iter().skip(a + 1) {
            if let Some(p) = pair_part(h2, cfg2, &frags2, w1, w2) {
                candidates.push(p);
            }
        }
    }

    let mut state = Search {
        h1,
        frags1: &frags1,
        frags2: &frags2,
        leaves: &leaves,
        candidates: &candidates,
        used: BTreeSet::new(),
        fwd: BTreeMap::new(),
        rev: BTreeMap::new(),
        parts: Vec::new(),
    };
    state.descend(cfg1, 0)
}

struct Search<'a> {
    h1: &'a Graph,
    frags1: &'a BTreeMap<Label, Vec<Fragment>>,
    frags2: &'a BTreeMap<Label, Vec<Fragment>>,
    leaves: &'a [usize],
    candidates: &'a [Part],
    used: BTreeSet<usize>,
    fwd: BTreeMap<Label, Label>,
    rev: BTreeMap<Label, Label>,
    parts: Vec<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, cfg1: &Config, depth: usize) -> Option<BoundaryCorrespondence> {
        if depth == self.leaves.len() {
            return Some(BoundaryCorrespondence {
                parts: self.parts.clone(),
                label_map: self.fwd.clone(),
            });
        }
        let v = self.leaves[depth];
        let (i, j) = cfg1.get(v, self.h1.neighbors(v)[0])?;
        for c in 0..self.candidates.len() {
            let part = &self.candidates[c];
            if part.vertices.iter().any(|w| self.used.contains(w)) {
                continue;
            }
            for (x, y) in [(i, j), (j, i)] {
                let [t0, t1] = self.candidates[c].through;
                let bound = [self.bind(x, t0), self.bind(y, t1)];
                let feasible = bound.iter().all(Option::is_some)
                    && self.matched_lengths(x, v, t0)
                    && self.matched_lengths(y, v, t1);
                if feasible {
                    let part = self.candidates[c].clone();
                    self.used.extend(part.vertices.iter().copied());
                    self.parts.push((v, part.vertices.clone()));
                    if let Some(found) = self.descend(cfg1, depth + 1) {
                        return Some(found);
                    }
                    self.parts.pop();
                    for w in &part.vertices {
                        self.used.remove(w);
                    }
                }
                for (freshly, b) in [(x, bound[0]), (y, bound[1])] {
                    if b == Some(false) {
                        let img = self.fwd.remove(&freshly).expect("fresh binding recorded");
                        self.rev.remove(&img);
                    }
                }
            }
        }
        None
    }

    /// Binds `from ↦ to.label` in the global bijection. Returns `Some(true)`
    /// if the pair was already bound consistently, `Some(false)` if it was
    /// freshly inserted, `None` on conflict.
    fn bind(&mut self, from: Label, to: (Label, usize)) -> Option<bool> {
        match (self.fwd.get(&from), self.rev.get(&to.0)) {
            (Some(&img), _) if img == to.0 => Some(true),
            (None, None) => {
                self.fwd.insert(from, to.0);
                self.rev.insert(to.0, from);
                Some(false)
            }
            _ => None,
        }
    }

    /// Whether `label`'s fragment at `v` on the first side and `t.0`'s
    /// fragment at `t.1` on the second both exist and have equal length.
    fn matched_lengths(&self, label: Label, v: usize, t: (Label, usize)) -> bool {
        let first = fragment_at(self.frags1, label, v).map(Fragment::len);
        let second = fragment_at(self.frags2, t.0, t.1).map(Fragment::len);
        first.zip(second).is_some_and(|(a, b)| a == b)
    }
}

/// The configuration induced on `pattern` by an embedding into a labelled
/// host: pattern edge `(u, v)` inherits the labels of the image edge.
pub fn pull_back(host_cfg: &Config, pattern: &Graph, embedding: &[usize]) -> Option<Config> {
    let mut out = Config::new();
    for (u, v) in pattern.edges() {
        let (i, j) = host_cfg.get(embedding[u], embedding[v])?;
        out.insert(u, v, i, j).ok()?;
    }
    Some(out)
}

/// Whether the configured host is self-similar with respect to the
/// configured seed: its own configuration is equivalent to the seed's, it
/// contains at least one embedded copy of the seed graph, and every copy's
/// restricted configuration is equivalent to the seed's. With
/// `exempt_complete_cycle_copies`, copies whose restricted configuration
/// contains a finished 6-cycle are excused from the copy condition.
pub fn is_self_similar(
    host: &Graph,
    host_cfg: &Config,
    seed: &Graph,
    seed_cfg: &Config,
    exempt_complete_cycle_copies: bool,
) -> bool {
    if configs_equivalent(seed, seed_cfg, host, host_cfg).is_none() {
        return false;
    }
    let mut any_copy = false;
    let mut all_ok = true;
    for_each_embedding(host, seed, false, |phi| {
        any_copy = true;
        let Some(sub) = pull_back(host_cfg, seed, phi) else {
            all_ok = false;
            return ControlFlow::Break(());
        };
        if exempt_complete_cycle_copies && complete_cycle_label(&sub).is_some() {
            return ControlFlow::Continue(());
        }
        if configs_equivalent(seed, seed_cfg, seed, &sub).is_none() {
            all_ok = false;
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    any_copy && all_ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{enumerate_seed_configs, validate_config};

    fn girth3_seed() -> (Graph, Config) {
        let seeds = enumerate_seed_configs(3);
        (seeds.seed, seeds.proper[0].clone())
    }

    #[test]
    fn seed_is_equivalent_to_itself() {
        let (s, cfg) = girth3_seed();
        let corr = configs_equivalent(&s, &cfg, &s, &cfg).expect("identity correspondence");
        assert_eq!(corr.parts.len(), 3);
        assert!(corr.parts.iter().all(|(_, part)| part.len() == 1));
        // Three open labels, mapped bijectively.
        assert_eq!(corr.label_map.len(), 3);
        let images: BTreeSet<Label> = corr.label_map.values().copied().collect();
        assert_eq!(images.len(), 3);
    }

    #[test]
    fn equivalence_survives_relabeling() {
        let (s, cfg) = girth3_seed();
        let rot = vec![1, 2, 0, 4, 5, 3];
        let other = cfg.relabel_vertices(&rot).map_labels(|l| l * 3 + 2);
        assert!(configs_equivalent(&s, &cfg, &s, &other).is_some());
        assert!(configs_equivalent(&s, &other, &s, &cfg).is_some());
    }

    #[test]
    fn seed_is_self_similar_with_respect_to_itself() {
        let (s, cfg) = girth3_seed();
        assert!(is_self_similar(&s, &cfg, &s, &cfg, false));
    }

    /// Closing one label of the girth-3 seed configuration into a finished
    /// 6-cycle through one extra vertex yields a strict intermediate. It is
    /// not self-similar: its own configuration is not equivalent to the
    /// seed's (the new vertex leaves an odd number of degree-2 deficiencies).
    #[test]
    fn strict_intermediate_is_not_self_similar() {
        let (s, cfg) = girth3_seed();
        let seeds = enumerate_seed_configs(3);
        assert_eq!(validate_config(&seeds.seed, &cfg, 3), Ok(()));
        // Label fragments of the canonical girth-3 configuration all have
        // length 4; close the one ending at pendants 3 and 5 via vertex 6.
        let mut host = s.clone();
        let six = host.add_vertex();
        host.add_edge(3, six).unwrap();
        host.add_edge(5, six).unwrap();
        let closing = crate::config::all_fragments(&cfg)
            .into_iter()
            .find_map(|(l, parts)| {
                (parts[0].endpoints() == Some((3, 5))).then_some(l)
            })
            .expect("one fragment runs from pendant 3 to pendant 5");
        let mut host_cfg = cfg.clone();
        host_cfg.insert(3, six, closing, 90).unwrap();
        host_cfg.insert(5, six, closing, 91).unwrap();
        assert_eq!(validate_config(&host, &host_cfg, 3), Ok(()));
        assert!(complete_cycle_label(&host_cfg).is_some());
        assert!(configs_equivalent(&s, &cfg, &host, &host_cfg).is_none());
        assert!(!is_self_similar(&host, &host_cfg, &s, &cfg, false));
        // The copy condition alone would pass: the unique embedded copy
        // restricts back to the seed configuration itself.
        let phi: Vec<usize> = (0..6).collect();
        let sub = pull_back(&host_cfg, &s, &phi).unwrap();
        assert_eq!(sub, cfg);
    }

    /// A toy labelled 6-cycle whose six degree-2 vertices pair up into three
    /// connector parts. The part structure matches a claw's three leaves,
    /// but every through-fragment has length 3 against the claw's 2, so the
    /// pair-part machinery must reject the match on lengths.
    #[test]
    fn pair_parts_are_built_but_lengths_must_match() {
        let claw = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let claw_cfg =
            Config::from_rows([(0, 1, 0, 1), (0, 2, 0, 2), (0, 3, 1, 2)]).unwrap();
        let hexagon =
            Graph::from_edges(6, &(0..6).map(|i| (i, (i + 1) % 6)).collect::<Vec<_>>()).unwrap();
        // Connectors 10, 11, 12 on edges (0,1), (2,3), (4,5); labels 20, 21,
        // 22 run along three edges each.
        let hex_cfg = Config::from_rows([
            (0, 1, 10, 22),
            (1, 2, 20, 22),
            (2, 3, 11, 20),
            (3, 4, 20, 21),
            (4, 5, 12, 21),
            (5, 0, 21, 22),
        ])
        .unwrap();
        // Sanity: the parts exist (each adjacent pair has its connector).
        let frags = all_fragments(&hex_cfg);
        for (w1, w2, conn) in [(0, 1, 10), (2, 3, 11), (4, 5, 12)] {
            let part = pair_part(&hexagon, &hex_cfg, &frags, w1, w2).expect("valid pair part");
            assert_eq!(part.vertices, vec![w1, w2]);
            assert!(part.through.iter().all(|&(l, _)| l != conn));
        }
        // Through-fragments have length 3, the claw's have length 2.
        assert!(configs_equivalent(&claw, &claw_cfg, &hexagon, &hex_cfg).is_none());
    }

    #[test]
    fn odd_degree_two_count_has_no_correspondence() {
        let (s, cfg) = girth3_seed();
        // Subdivide pendant edge (0, 3): one degree-2 deficient vertex.
        let mut host = Graph::new(7);
        for (u, v) in s.edges() {
            if (u, v) != (0, 3) {
                host.add_edge(u, v).unwrap();
            }
        }
        host.add_edge(0, 6).unwrap();
        host.add_edge(6, 3).unwrap();
        let mut host_cfg = Config::new();
        for ((u, v), (i, j)) in cfg.iter() {
            if (u, v) != (0, 3) {
                host_cfg.insert(u, v, i, j).unwrap();
            }
        }
        let (i, j) = cfg.get(0, 3).unwrap();
        host_cfg.insert(0, 6, i, j).unwrap();
        host_cfg.insert(6, 3, i, 95).unwrap();
        assert!(configs_equivalent(&s, &cfg, &host, &host_cfg).is_none());
    }

    #[test]
    fn pull_back_restricts_labels() {
        let (s, cfg) = girth3_seed();
        let phi: Vec<usize> = vec![1, 2, 0, 4, 5, 3];
        let sub = pull_back(&cfg, &s, &phi).unwrap();
        for (u, v) in s.edges() {
            assert_eq!(sub.get(u, v), cfg.get(phi[u], phi[v]));
        }
        // Image edges missing from the labelled host yield None.
        let bad = vec![0, 1, 2, 3, 4, 6];
        assert!(pull_back(&cfg, &s, &bad).is_none());
    }
}
