//! Circulant graphs and the two named cubic families built on cycles:
//! Möbius ladders `M_n` and two-layer toruses `T_{n,2}`.

use crate::canon::certificate;
use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Errors for family constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a circulant step must lie in 1..=n/2 (got {0} with n = {1})")]
    StepOutOfRange(usize, usize),
    #[error("duplicate step {0}")]
    DuplicateStep(usize),
    #[error("{family} requires an even vertex count of at least {min} (got {n})")]
    BadOrder {
        family: &'static str,
        min: usize,
        n: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The circulant graph on `n` vertices with the given connection steps:
/// vertex `i` is adjacent to `i ± s (mod n)` for each step `s`. Steps must
/// be distinct values in `1..=n/2`; the step `n/2` (for even `n`)
/// contributes a single perfect-matching edge per vertex.
pub fn circulant(n: usize, steps: &[usize]) -> Result<Graph, FamilyError> {
    let mut seen = Vec::new();
    for &s in steps {
        if s == 0 || s > n / 2 {
            return Err(FamilyError::StepOutOfRange(s, n));
        }
        if seen.contains(&s) {
            return Err(FamilyError::DuplicateStep(s));
        }
        seen.push(s);
    }
    let mut g = Graph::new(n);
    for &s in steps {
        for i in 0..n {
            let j = (i + s) % n;
            if !g.has_edge(i, j) {
                g.add_edge(i, j)?;
            }
        }
    }
    Ok(g)
}

/// The Möbius ladder `M_n`: an `n`-cycle plus chords between antipodal
/// vertices. Defined for even `n ≥ 4`; equals the circulant with steps
/// `{1, n/2}`.
pub fn moebius_ladder(n: usize) -> Result<Graph, FamilyError> {
    if n < 4 || n % 2 != 0 {
        return Err(FamilyError::BadOrder {
            family: "Moebius ladder",
            min: 4,
            n,
        });
    }
    circulant(n, &[1, n / 2])
}

/// The two-layer torus `T_{n,2}`: a `2 × n/2` mesh whose maximally distant
/// same-row vertices are joined, i.e. two disjoint `(n/2)`-cycles
/// `0..n/2` and `n/2..n` joined by the vertical matching. Defined for even
/// `n ≥ 6`.
pub fn torus_two_layer(n: usize) -> Result<Graph, FamilyError> {
    if n < 6 || n % 2 != 0 {
        return Err(FamilyError::BadOrder {
            family: "two-layer torus",
            min: 6,
            n,
        });
    }
    let k = n / 2;
    let mut g = Graph::new(n);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k)?;
        g.add_edge(k + i, k + (i + 1) % k)?;
        g.add_edge(i, k + i)?;
    }
    Ok(g)
}

/// If `g` is isomorphic to some `M_n`, returns that `n`.
pub fn as_moebius_ladder(g: &Graph) -> Option<usize> {
    let n = g.n();
    let m = moebius_ladder(n).ok()?;
    (certificate(&m) == certificate(g)).then_some(n)
}

/// If `g` is isomorphic to some `T_{n,2}`, returns that `n`.
pub fn as_torus_two_layer(g: &Graph) -> Option<usize> {
    let n = g.n();
    let t = torus_two_layer(n).ok()?;
    (certificate(&t) == certificate(g)).then_some(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn m4_is_k4() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(are_isomorphic(&moebius_ladder(4).unwrap(), &k4));
    }

    #[test]
    fn m6_is_k33() {
        let k33 = Graph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert!(are_isomorphic(&moebius_ladder(6).unwrap(), &k33));
        assert_eq!(moebius_ladder(6).unwrap().girth(), Some(4));
    }

    #[test]
    fn t62_is_prism() {
        let prism = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        assert!(are_isomorphic(&torus_two_layer(6).unwrap(), &prism));
    }

    #[test]
    fn t82_is_cube() {
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
        assert!(are_isomorphic(&torus_two_layer(8).unwrap(), &cube));
        assert_eq!(torus_two_layer(8).unwrap().girth(), Some(4));
    }

    #[test]
    fn moebius_as_circulant_with_multiplied_steps() {
        // Multiplying the connection set by a unit mod n relabels the
        // circulant: steps {3, 4} on 8 vertices give 3·1 = 3 and 3·4 ≡ 4,
        // so C_8(3,4) is M_8 relabeled by x ↦ 3x.
        let m8 = moebius_ladder(8).unwrap();
        let c834 = circulant(8, &[3, 4]).unwrap();
        assert!(are_isomorphic(&m8, &c834));
        // The explicit mapping: x ↦ 3x carries edge {i, i+1} to {3i, 3i+3}
        // and {i, i+4} to {3i, 3i+12 mod 8}: exactly the steps {3, 4}.
        let perm: Vec<usize> = (0..8).map(|x| (3 * x) % 8).collect();
        assert_eq!(m8.relabel(&perm), c834);
    }

    #[test]
    fn disconnected_circulant() {
        // Steps {2, 4} on 8 vertices: both steps even, so the odd and even
        // classes never mix.
        let c = circulant(8, &[2, 4]).unwrap();
        assert!(!c.is_connected());
        assert!(c.is_cubic());
        // Each component is a 4-cycle with both diagonals: K_4.
        assert_eq!(c.girth(), Some(3));
    }

    #[test]
    fn torus_connectivity_matches_circulant_only_for_odd_half() {
        // C_n(2, n/2) is T_{n,2} exactly when n/2 is odd; when n/2 is even
        // the antipodal matching stays inside each parity class.
        for n in [6usize, 10, 14] {
            let c = circulant(n, &[2, n / 2]).unwrap();
            assert!(are_isomorphic(&c, &torus_two_layer(n).unwrap()), "n = {n}");
        }
        for n in [8usize, 12] {
            let c = circulant(n, &[2, n / 2]).unwrap();
            assert!(!c.is_connected(), "n = {n}");
            assert!(!are_isomorphic(&c, &torus_two_layer(n).unwrap()));
        }
    }

    #[test]
    fn recognizers() {
        assert_eq!(as_moebius_ladder(&moebius_ladder(10).unwrap()), Some(10));
        assert_eq!(as_torus_two_layer(&torus_two_layer(10).unwrap()), Some(10));
        assert_eq!(as_moebius_ladder(&torus_two_layer(10).unwrap()), None);
        // M_6 = K_3,3 = T_6,2? No: T_6,2 is the prism, which has triangles.
        assert_eq!(as_torus_two_layer(&moebius_ladder(6).unwrap()), None);
        // M_4 = K_4 and T_4,2 is undefined.
        assert!(torus_two_layer(4).is_err());
        assert!(moebius_ladder(5).is_err());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(
            circulant(8, &[0]),
            Err(FamilyError::StepOutOfRange(0, 8))
        );
        assert_eq!(
            circulant(8, &[5]),
            Err(FamilyError::StepOutOfRange(5, 8))
        );
        assert_eq!(circulant(8, &[2, 2]), Err(FamilyError::DuplicateStep(2)));
    }
}
