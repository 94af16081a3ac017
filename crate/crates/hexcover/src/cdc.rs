//! Double covers by 6-cycles and their structural laws.
//!
//! A cover is a family of 6-cycles of a cubic host such that every edge lies
//! on exactly two of them. `verify_6cdc` checks the definition and, lemma by
//! lemma, the structural facts that follow from it: the cycle count is
//! `n/2`; no two cycles share two consecutive edges; every vertex lies on
//! exactly three cycles; pairwise overlaps satisfy `μ ≤ 3`; and adjacency
//! degrees satisfy `2 ≤ σ ≤ 6`. Each failed check carries a witness.

use crate::circulant::{as_moebius_ladder, as_torus_two_layer};
use crate::cycles::{cycle_edges, is_cycle};
use crate::graph::Graph;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use thiserror::Error;

/// A set of 6-cycles over some host graph, stored as normalized vertex
/// sequences in sorted order, so equal covers compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cdc {
    cycles: Vec<Vec<usize>>,
}

/// Rotates/reflects a cycle sequence so the least vertex comes first,
/// followed by the smaller of its two cycle neighbors.
pub fn normalize_cycle(cycle: &[usize]) -> Vec<usize> {
    let k = cycle.len();
    let start = (0..k).min_by_key(|&i| cycle[i]).expect("nonempty cycle");
    let fwd = cycle[(start + 1) % k];
    let bwd = cycle[(start + k - 1) % k];
    let mut out = Vec::with_capacity(k);
    if fwd <= bwd {
        for i in 0..k {
            out.push(cycle[(start + i) % k]);
        }
    } else {
        for i in 0..k {
            out.push(cycle[(start + k - i) % k]);
        }
    }
    out
}

impl Cdc {
    /// Builds a cover from cycle sequences, normalizing and sorting.
    pub fn new(cycles: Vec<Vec<usize>>) -> Cdc {
        let mut cycles: Vec<Vec<usize>> = cycles.iter().map(|c| normalize_cycle(c)).collect();
        cycles.sort();
        Cdc { cycles }
    }

    /// The cycles, normalized and sorted.
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    /// Number of cycles.
    pub fn t(&self) -> usize {
        self.cycles.len()
    }

    /// Edge → sorted indices of the cycles containing it.
    pub fn edge_cover(&self) -> BTreeMap<(usize, usize), Vec<usize>> {
        let mut cover: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, c) in self.cycles.iter().enumerate() {
            for e in cycle_edges(c) {
                cover.entry(e).or_default().push(i);
            }
        }
        cover
    }

    /// The cover carried along a relabeling of its host.
    pub fn relabel(&self, perm: &[usize]) -> Cdc {
        Cdc::new(
            self.cycles
                .iter()
                .map(|c| c.iter().map(|&v| perm[v]).collect())
                .collect(),
        )
    }
}

/// Structural errors that make a cycle list not even a candidate cover.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CdcError {
    #[error("host graph is not cubic (vertex {0} has degree {1})")]
    HostNotCubic(usize, usize),
    #[error("host graph is not connected")]
    HostNotConnected,
    #[error("entry {0} is not a 6-cycle of the host")]
    NotASixCycle(usize),
    #[error("duplicate cycle at entries {0} and {1}")]
    DuplicateCycle(usize, usize),
}

/// Witness for a failed check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An edge covered the wrong number of times.
    Edge { edge: (usize, usize), count: usize },
    /// A vertex lying on the wrong number of cycles.
    Vertex { vertex: usize, count: usize },
    /// A cycle pair with an offending overlap.
    CyclePair { i: usize, j: usize, mu: usize },
    /// A cycle whose adjacency count is out of range.
    Cycle { i: usize, sigma: usize },
    /// A global count mismatch.
    Count { expected: usize, found: usize },
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Edge { edge, count } => {
                write!(f, "edge {}-{} covered {} time(s)", edge.0, edge.1, count)
            }
            Witness::Vertex { vertex, count } => {
                write!(f, "vertex {vertex} lies on {count} cycle(s)")
            }
            Witness::CyclePair { i, j, mu } => {
                write!(f, "cycles {i} and {j} overlap in {mu} edge(s)")
            }
            Witness::Cycle { i, sigma } => write!(f, "cycle {i} has sigma = {sigma}"),
            Witness::Count { expected, found } => {
                write!(f, "expected {expected}, found {found}")
            }
        }
    }
}

/// One verified condition: pass, or fail with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass(&self) -> bool {
        self.witness.is_none()
    }
}

/// The full verification report for a candidate cover.
#[derive(Debug, Clone)]
pub struct CdcReport {
    /// Definition: every edge on exactly two cycles.
    pub edge_coverage: Check,
    /// The cover has exactly n/2 cycles.
    pub cycle_count: Check,
    /// No two cycles share two consecutive edges.
    pub no_shared_path: Check,
    /// Every vertex lies on exactly three distinct cycles.
    pub vertex_cycles: Check,
    /// Pairwise overlaps are at most 3.
    pub mu_bound: Check,
    /// Every cycle meets between 2 and 6 others.
    pub sigma_bound: Check,
    /// μ matrix: shared-edge counts, symmetric, zero diagonal.
    pub mu: Vec<Vec<usize>>,
    /// σ vector: number of other cycles sharing at least one edge.
    pub sigma: Vec<usize>,
}

impl CdcReport {
    pub fn checks(&self) -> [&Check; 6] {
        [
            &self.edge_coverage,
            &self.cycle_count,
            &self.no_shared_path,
            &self.vertex_cycles,
            &self.mu_bound,
            &self.sigma_bound,
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|c| c.pass())
    }
}

/// μ matrix and σ vector of a cover.
pub fn intersection_stats(cdc: &Cdc) -> (Vec<Vec<usize>>, Vec<usize>) {
    let t = cdc.t();
    let edge_sets: Vec<BTreeSet<(usize, usize)>> = cdc
        .cycles()
        .iter()
        .map(|c| cycle_edges(c).into_iter().collect())
        .collect();
    let mut mu = vec![vec![0usize; t]; t];
    for i in 0..t {
        for j in i + 1..t {
            let shared = edge_sets[i].intersection(&edge_sets[j]).count();
            mu[i][j] = shared;
            mu[j][i] = shared;
        }
    }
    let sigma = (0..t)
        .map(|i| (0..t).filter(|&j| j != i && mu[i][j] > 0).count())
        .collect();
    (mu, sigma)
}

/// Verifies a candidate cover against its host, checking the definition and
/// each structural law; structural impossibilities (non-cubic host, entries
/// that are not 6-cycles) are errors, failed laws are report entries.
pub fn verify_6cdc(g: &Graph, cdc: &Cdc) -> Result<CdcReport, CdcError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(CdcError::HostNotCubic(v, g.degree(v)));
    }
    if !g.is_connected() {
        return Err(CdcError::HostNotConnected);
    }
    for (i, c) in cdc.cycles().iter().enumerate() {
        if c.len() != 6 || !is_cycle(g, c) {
            return Err(CdcError::NotASixCycle(i));
        }
    }
    for i in 1..cdc.t() {
        if cdc.cycles()[i - 1] == cdc.cycles()[i] {
            return Err(CdcError::DuplicateCycle(i - 1, i));
        }
    }

    let cover = cdc.edge_cover();
    let edge_coverage = {
        let mut witness = None;
        for (u, v) in g.edges() {
            let count = cover.get(&(u, v)).map_or(0, |c| c.len());
            if count != 2 {
                witness = Some(Witness::Edge {
                    edge: (u, v),
                    count,
                });
                break;
            }
        }
        Check {
            name: "every edge on exactly two cycles",
            witness,
        }
    };

    let cycle_count = Check {
        name: "cycle count equals n/2",
        witness: (cdc.t() != g.n() / 2).then_some(Witness::Count {
            expected: g.n() / 2,
            found: cdc.t(),
        }),
    };

    // Two cycles share two consecutive edges exactly when two of their
    // shared edges meet at a vertex: a cycle that contains two edges at a
    // vertex necessarily traverses them as a path.
    let no_shared_path = {
        let edge_sets: Vec<Vec<(usize, usize)>> =
            cdc.cycles().iter().map(|c| cycle_edges(c)).collect();
        let mut witness = None;
        'outer: for i in 0..cdc.t() {
            for j in i + 1..cdc.t() {
                let shared: Vec<&(usize, usize)> = edge_sets[i]
                    .iter()
                    .filter(|e| edge_sets[j].contains(e))
                    .collect();
                for (a, e) in shared.iter().enumerate() {
                    for f in &shared[a + 1..] {
                        if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
                            witness = Some(Witness::CyclePair {
                                i,
                                j,
                                mu: shared.len(),
                            });
                            break 'outer;
                        }
                    }
                }
            }
        }
        Check {
            name: "no two cycles share consecutive edges",
            witness,
        }
    };

    let vertex_cycles = {
        let mut through: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); g.n()];
        for (i, c) in cdc.cycles().iter().enumerate() {
            for &v in c {
                through[v].insert(i);
            }
        }
        let witness = (0..g.n()).find_map(|v| {
            (through[v].len() != 3).then_some(Witness::Vertex {
                vertex: v,
                count: through[v].len(),
            })
        });
        Check {
            name: "every vertex on exactly three cycles",
            witness,
        }
    };

    let (mu, sigma) = intersection_stats(cdc);
    let mu_bound = {
        let mut witness = None;
        'outer: for i in 0..cdc.t() {
            for j in i + 1..cdc.t() {
                if mu[i][j] > 3 {
                    witness = Some(Witness::CyclePair { i, j, mu: mu[i][j] });
                    break 'outer;
                }
            }
        }
        Check {
            name: "pairwise overlap at most 3",
            witness,
        }
    };
    let sigma_bound = {
        let witness = (0..cdc.t()).find_map(|i| {
            (!(2..=6).contains(&sigma[i])).then_some(Witness::Cycle { i, sigma: sigma[i] })
        });
        Check {
            name: "sigma between 2 and 6",
            witness,
        }
    };

    Ok(CdcReport {
        edge_coverage,
        cycle_count,
        no_shared_path,
        vertex_cycles,
        mu_bound,
        sigma_bound,
        mu,
        sigma,
    })
}

/// Report for the three structure theorems tying covers to girth.
#[derive(Debug, Clone)]
pub struct StructureReport {
    /// If any pairwise overlap is 3, the host is `M_6` or `T_{6,2}`.
    pub mu3_hosts: Check,
    /// Girth at least 5 holds exactly when every σ is 6.
    pub girth_sigma_equivalence: Check,
    /// Any σ below 6 forces girth below 5.
    pub sigma_forces_girth: Check,
}

impl StructureReport {
    pub fn all_pass(&self) -> bool {
        self.mu3_hosts.pass() && self.girth_sigma_equivalence.pass() && self.sigma_forces_girth.pass()
    }
}

/// Checks the structure theorems on a verified cover.
pub fn check_structure_theorems(g: &Graph, cdc: &Cdc) -> StructureReport {
    let (mu, sigma) = intersection_stats(cdc);
    let t = cdc.t();
    let girth = g.girth().unwrap_or(usize::MAX);

    let mu3_witness = (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| (i, j)))
        .find(|&(i, j)| mu[i][j] == 3)
        .and_then(|(i, j)| {
            let named = as_moebius_ladder(g) == Some(6) || as_torus_two_layer(g) == Some(6);
            (!named).then_some(Witness::CyclePair { i, j, mu: 3 })
        });

    let all_sigma_six = sigma.iter().all(|&s| s == 6);
    let girth_sigma_witness = if (girth >= 5) != all_sigma_six {
        Some(
            sigma
                .iter()
                .enumerate()
                .find(|&(_, &s)| s != 6)
                .map(|(i, &s)| Witness::Cycle { i, sigma: s })
                .unwrap_or(Witness::Count {
                    expected: 6,
                    found: girth,
                }),
        )
    } else {
        None
    };

    let sigma_forces_witness = sigma
        .iter()
        .enumerate()
        .find(|&(_, &s)| s < 6 && girth >= 5)
        .map(|(i, &s)| Witness::Cycle { i, sigma: s });

    StructureReport {
        mu3_hosts: Check {
            name: "overlap 3 only on the two named six-vertex hosts",
            witness: mu3_witness,
        },
        girth_sigma_equivalence: Check {
            name: "girth at least 5 iff every sigma is 6",
            witness: girth_sigma_witness,
        },
        sigma_forces_girth: Check {
            name: "sigma below 6 forces girth below 5",
            witness: sigma_forces_witness,
        },
    }
}

/// Simple adjacency between cover cycles: entry `i` lists the cycles
/// sharing at least one edge with cycle `i`. For girth-5-or-more hosts this
/// relation is 6-regular.
pub fn cycle_adjacency(cdc: &Cdc) -> Vec<BTreeSet<usize>> {
    let (mu, _) = intersection_stats(cdc);
    (0..cdc.t())
        .map(|i| {
            (0..cdc.t())
                .filter(|&j| j != i && mu[i][j] > 0)
                .collect()
        })
        .collect()
}

/// All triangles `{i, j, k}` of the cycle-adjacency relation.
pub fn adjacency_triangles(adj: &[BTreeSet<usize>]) -> Vec<[usize; 3]> {
    let t = adj.len();
    let mut out = Vec::new();
    for i in 0..t {
        for &j in adj[i].iter().filter(|&&j| j > i) {
            for &k in adj[j].iter().filter(|&&k| k > j) {
                if adj[i].contains(&k) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}

/// Which cycles of the cover pass through each vertex.
pub fn vertex_incidence(cdc: &Cdc, n: usize) -> Vec<BTreeSet<usize>> {
    let mut through = vec![BTreeSet::new(); n];
    for (i, c) in cdc.cycles().iter().enumerate() {
        for &v in c {
            through[v].insert(i);
        }
    }
    through
}
