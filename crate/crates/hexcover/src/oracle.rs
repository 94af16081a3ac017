//! Exhaustive search for covers: choose `n/2` hexagons of a cubic host so
//! that every edge lies on exactly two of them.
//!
//! The search is exact cover with multiplicity two: it repeatedly picks the
//! uncovered edge with the fewest usable hexagons through it and branches on
//! the unordered set of hexagons that will complete that edge's coverage.
//! Because each solution assigns a unique completion set to the chosen edge,
//! no solution is produced twice.

use crate::cdc::Cdc;
use crate::cycles::{cycle_edges, hexagons};
use crate::graph::Graph;
use std::collections::BTreeMap;
use thiserror::Error;

/// Search mode: stop at the first cover, or collect all of them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    First,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("host graph is not cubic (vertex {0} has degree {1})")]
    HostNotCubic(usize, usize),
    #[error("host graph is not connected")]
    HostNotConnected,
}

struct Cover<'a> {
    /// Edge list of each candidate hexagon, as indices into `edge_ids`.
    hex_edges: Vec<Vec<usize>>,
    /// Remaining multiplicity per edge id (starts at 2).
    remaining: Vec<u8>,
    /// Hexagon ids through each edge id.
    through: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    hexes: &'a [Vec<usize>],
    solutions: Vec<Vec<usize>>,
    mode: Mode,
    done: bool,
}

impl<'a> Cover<'a> {
    fn usable(&self, h: usize) -> bool {
        !self.chosen.contains(&h) && self.hex_edges[h].iter().all(|&e| self.remaining[e] > 0)
    }

    fn solve(&mut self) {
        if self.done {
            return;
        }
        // Most constrained uncovered edge.
        let target = (0..self.remaining.len())
            .filter(|&e| self.remaining[e] > 0)
            .min_by_key(|&e| self.through[e].iter().filter(|&&h| self.usable(h)).count());
        let Some(edge) = target else {
            self.solutions.push(self.chosen.clone());
            if self.mode == Mode::First {
                self.done = true;
            }
            return;
        };
        let need = self.remaining[edge] as usize;
        let candidates: Vec<usize> = self.through[edge]
            .iter()
            .copied()
            .filter(|&h| self.usable(h))
            .collect();
        if candidates.len() < need {
            return;
        }
        // Branch over unordered `need`-subsets of the candidates.
        let mut subset = vec![0usize; need];
        self.pick_subset(&candidates, 0, 0, &mut subset);
    }

    fn pick_subset(&mut self, candidates: &[usize], start: usize, depth: usize, subset: &mut Vec<usize>) {
        if self.done {
            return;
        }
        if depth == subset.len() {
            let picked: Vec<usize> = subset.clone();
            if self.apply(&picked) {
                self.solve();
                self.unapply(&picked);
            }
            return;
        }
        for i in start..candidates.len() {
            subset[depth] = candidates[i];
            self.pick_subset(candidates, i + 1, depth + 1, subset);
        }
    }

    /// Commits a set of hexagons; fully undone if any edge would be
    /// overcovered.
    fn apply(&mut self, picked: &[usize]) -> bool {
        for (k, &h) in picked.iter().enumerate() {
            if !self.apply_one(h) {
                for &hh in picked[..k].iter().rev() {
                    self.unapply_one(hh);
                }
                return false;
            }
        }
        true
    }

    fn apply_one(&mut self, h: usize) -> bool {
        for (idx, &e) in self.hex_edges[h].iter().enumerate() {
            if self.remaining[e] == 0 {
                for &ee in &self.hex_edges[h][..idx] {
                    self.remaining[ee] += 1;
                }
                return false;
            }
            self.remaining[e] -= 1;
        }
        self.chosen.push(h);
        true
    }

    fn unapply_one(&mut self, h: usize) {
        debug_assert_eq!(self.chosen.last(), Some(&h));
        self.chosen.pop();
        for &e in &self.hex_edges[h] {
            self.remaining[e] += 1;
        }
    }

    fn unapply(&mut self, picked: &[usize]) {
        for &h in picked.iter().rev() {
            self.unapply_one(h);
        }
    }
}

/// Searches for covers of `g`, given an explicit hexagon pool. Exposed so
/// order-independence can be tested; `find_6cdc` supplies the full pool.
pub fn find_6cdc_from_pool(
    g: &Graph,
    pool: &[Vec<usize>],
    mode: Mode,
) -> Result<Vec<Cdc>, OracleError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) != 3) {
        return Err(OracleError::HostNotCubic(v, g.degree(v)));
    }
    if !g.is_connected() {
        return Err(OracleError::HostNotConnected);
    }
    let edge_ids: BTreeMap<(usize, usize), usize> = g
        .edges()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect();
    let hex_edges: Vec<Vec<usize>> = pool
        .iter()
        .map(|h| cycle_edges(h).into_iter().map(|e| edge_ids[&e]).collect())
        .collect();
    let mut through = vec![Vec::new(); edge_ids.len()];
    for (h, edges) in hex_edges.iter().enumerate() {
        for &e in edges {
            through[e].push(h);
        }
    }
    let mut cover = Cover {
        hex_edges,
        remaining: vec![2; edge_ids.len()],
        through,
        chosen: Vec::new(),
        hexes: pool,
        solutions: Vec::new(),
        mode,
        done: false,
    };
    cover.solve();
    let mut out: Vec<Cdc> = cover
        .solutions
        .iter()
        .map(|sol| Cdc::new(sol.iter().map(|&h| cover.hexes[h].clone()).collect()))
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

/// Finds covers of `g`: every family of `n/2` hexagons covering each edge
/// exactly twice. Empty result means no cover exists.
pub fn find_6cdc(g: &Graph, mode: Mode) -> Result<Vec<Cdc>, OracleError> {
    find_6cdc_from_pool(g, &hexagons(g), mode)
}

/// Whether `g` has at least one cover.
pub fn has_6cdc(g: &Graph) -> Result<bool, OracleError> {
    Ok(!find_6cdc(g, Mode::First)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cdc::verify_6cdc;
    use crate::circulant::{moebius_ladder, torus_two_layer};
    use crate::graph::Graph;

    fn prism() -> Graph {
        torus_two_layer(6).unwrap()
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

    fn heawood() -> Graph {
        let mut e: Vec<(usize, usize)> = (0..14).map(|i| (i, (i + 1) % 14)).collect();
        for i in (0..14).step_by(2) {
            e.push((i, (i + 5) % 14));
        }
        Graph::from_edges(14, &e).unwrap()
    }

    #[test]
    fn k4_has_no_cover() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(find_6cdc(&k4, Mode::All).unwrap(), vec![]);
        assert!(!has_6cdc(&k4).unwrap());
    }

    #[test]
    fn prism_has_exactly_one_cover() {
        let covers = find_6cdc(&prism(), Mode::All).unwrap();
        assert_eq!(covers.len(), 1);
        let report = verify_6cdc(&prism(), &covers[0]).unwrap();
        assert!(report.all_pass());
        assert_eq!(covers[0].t(), 3);
        let first = find_6cdc(&prism(), Mode::First).unwrap();
        assert_eq!(first, covers);
    }

    #[test]
    fn m6_has_exactly_two_covers() {
        // The two one-factorizations of the six-vertex Moebius ladder give
        // exactly two covers (each cover's cycles are the complements of a
        // factorization's matchings).
        let m6 = moebius_ladder(6).unwrap();
        let covers = find_6cdc(&m6, Mode::All).unwrap();
        assert_eq!(covers.len(), 2);
        for cdc in &covers {
            assert!(verify_6cdc(&m6, cdc).unwrap().all_pass());
        }
    }

    #[test]
    fn petersen_has_no_cover() {
        assert_eq!(find_6cdc(&petersen(), Mode::All).unwrap(), vec![]);
    }

    #[test]
    fn heawood_covers_exist_and_validate() {
        let h = heawood();
        let covers = find_6cdc(&h, Mode::All).unwrap();
        assert!(!covers.is_empty());
        for cdc in &covers {
            let report = verify_6cdc(&h, cdc).unwrap();
            assert!(report.all_pass());
            assert_eq!(cdc.t(), 7);
            // Girth 6 forces every sigma to 6.
            assert!(report.sigma.iter().all(|&s| s == 6));
        }
    }

    #[test]
    fn first_mode_returns_prefix_of_all_mode() {
        for g in [prism(), moebius_ladder(8).unwrap(), torus_two_layer(8).unwrap()] {
            let all = find_6cdc(&g, Mode::All).unwrap();
            let first = find_6cdc(&g, Mode::First).unwrap();
            assert_eq!(first.len(), usize::from(!all.is_empty()));
            if let Some(f) = first.first() {
                assert!(all.contains(f));
            }
        }
    }

    #[test]
    fn order_independence() {
        use rand::{seq::SliceRandom, SeedableRng};
        let mut rng = rand::rngs::StdRng::seed_from_u64(42);
        for g in [prism(), moebius_ladder(6).unwrap(), torus_two_layer(8).unwrap(), heawood()] {
            let pool = crate::cycles::hexagons(&g);
            let baseline = find_6cdc_from_pool(&g, &pool, Mode::All).unwrap();
            let mut reversed = pool.clone();
            reversed.reverse();
            assert_eq!(find_6cdc_from_pool(&g, &reversed, Mode::All).unwrap(), baseline);
            for _ in 0..3 {
                let mut shuffled = pool.clone();
                shuffled.shuffle(&mut rng);
                assert_eq!(
                    find_6cdc_from_pool(&g, &shuffled, Mode::All).unwrap(),
                    baseline
                );
            }
        }
    }

    #[test]
    fn oracle_rejects_bad_hosts() {
        let path = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert!(matches!(
            find_6cdc(&path, Mode::All),
            Err(OracleError::HostNotCubic(0, 1))
        ));
        let g = prism();
        let mut e = Vec::new();
        for &(u, v) in &g.edges() {
            e.push((u, v));
            e.push((u + 6, v + 6));
        }
        let two = Graph::from_edges(12, &e).unwrap();
        assert!(matches!(
            find_6cdc(&two, Mode::All),
            Err(OracleError::HostNotConnected)
        ));
    }

    #[test]
    fn every_solution_is_valid_on_small_ladders() {
        for n in [6usize, 8, 10, 12] {
            for g in [moebius_ladder(n).unwrap(), torus_two_layer(n).unwrap()] {
                for cdc in find_6cdc(&g, Mode::All).unwrap() {
                    let report = verify_6cdc(&g, &cdc).unwrap();
                    assert!(report.all_pass(), "n = {n}: {report:?}");
                }
            }
        }
    }
}
