//! The graph6 text encoding for simple graphs on up to 62 vertices.
//!
//! Layout: one header byte `n + 63`, then the upper triangle of the
//! adjacency matrix read column by column (`(0,1), (0,2), (1,2), (0,3), …`)
//! packed big-endian into 6-bit groups, each emitted as `group + 63`.
//! Unused padding bits in the final group must be zero.

use crate::graph::{Graph, GraphError};
use thiserror::Error;

/// Errors for graph6 encoding and decoding.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph has {0} vertices; this encoder supports at most 62")]
    TooLarge(usize),
    #[error("empty input")]
    Empty,
    #[error("byte {0:#04x} at position {1} outside the graph6 range 63..=126")]
    ByteOutOfRange(u8, usize),
    #[error("expected {expected} bytes for {n} vertices, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in final group")]
    TrailingGarbage,
    #[error("multi-byte vertex counts (n > 62) are not supported")]
    ExtendedSize,
    #[error("decoded graph is invalid here: {0}")]
    Graph(#[from] GraphError),
}

/// Number of payload bytes after the header for an `n`-vertex graph.
fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as a graph6 string.
pub fn encode(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > 62 {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + if n > 0 { payload_len(n) } else { 0 });
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("all bytes are printable ASCII"))
}

/// Decodes a graph6 string.
pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let bytes = s.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == 126 {
        return Err(Graph6Error::ExtendedSize);
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::ByteOutOfRange(first, 0));
    }
    let n = (first - 63) as usize;
    let expected = if n < 2 { 0 } else { payload_len(n) };
    let found = bytes.len() - 1;
    if found != expected {
        return Err(Graph6Error::BadLength { n, expected, found });
    }
    let mut bits = Vec::with_capacity(found * 6);
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange(b, pos));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push((v >> k) & 1 == 1);
        }
    }
    let mut g = Graph::new(n);
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                g.add_edge(i, j)?;
            }
            idx += 1;
        }
    }
    if bits[idx..].iter().any(|&b| b) {
        return Err(Graph6Error::TrailingGarbage);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    // Byte-level values worked out by hand from the format definition:
    // K_4 has n = 4 → 'C', and its six upper-triangle bits are all ones,
    // one full group 0b111111 = 63 → 63 + 63 = 126 = '~'.
    #[test]
    fn k4_is_c_tilde() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "C~");
        assert_eq!(decode("C~").unwrap(), g);
    }

    // A single edge on two vertices: n = 2 → 'A', one bit set then five
    // padding zeros: 0b100000 = 32 → 95 = '_'.
    #[test]
    fn single_edge_is_a_underscore() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "A_");
        assert_eq!(decode("A_").unwrap(), g);
    }

    #[test]
    fn tiny_graphs() {
        assert_eq!(encode(&Graph::new(0)).unwrap(), "?");
        assert_eq!(encode(&Graph::new(1)).unwrap(), "@");
        assert_eq!(encode(&Graph::new(2)).unwrap(), "A?");
        assert_eq!(decode("?").unwrap(), Graph::new(0));
        assert_eq!(decode("@").unwrap(), Graph::new(1));
    }

    #[test]
    fn six_cycle_round_trip() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let s = encode(&g).unwrap();
        assert_eq!(s.len(), 1 + 3); // 15 bits → 3 groups
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        assert_eq!(decode(""), Err(Graph6Error::Empty));
        assert_eq!(decode("~??"), Err(Graph6Error::ExtendedSize));
        assert_eq!(
            decode("C"),
            Err(Graph6Error::BadLength {
                n: 4,
                expected: 1,
                found: 0
            })
        );
        assert_eq!(
            decode("C~~"),
            Err(Graph6Error::BadLength {
                n: 4,
                expected: 1,
                found: 2
            })
        );
        assert_eq!(decode("C\n"), Err(Graph6Error::ByteOutOfRange(b'\n', 1)));
        // n = 3 uses 3 bits; a set bit in the padding is rejected.
        assert_eq!(decode("B?"), Ok(Graph::new(3)));
        assert_eq!(decode("B@"), Err(Graph6Error::TrailingGarbage));
        // A degree-4 vertex is outside this library's domain: encode the
        // star K_{1,3} on five vertices, then flip the (0,4) bit by hand.
        let mut g5 = Graph::new(5);
        for v in 1..4 {
            g5.add_edge(0, v).unwrap();
        }
        let s = encode(&g5).unwrap();
        // Flip the bit for (0,4): it is bit index 6 of the payload, the
        // first bit of the second group.
        let mut bytes = s.into_bytes();
        bytes[2] = ((bytes[2] - 63) | 0b100000) + 63;
        let bad = String::from_utf8(bytes).unwrap();
        assert_eq!(
            decode(&bad),
            Err(Graph6Error::Graph(GraphError::DegreeExceeded(0)))
        );
    }

    #[test]
    fn encode_rejects_large() {
        assert_eq!(encode(&Graph::new(63)), Err(Graph6Error::TooLarge(63)));
    }

    fn arbitrary_subcubic(n: usize, tries: usize) -> impl Strategy<Value = Graph> {
        proptest::collection::vec((0..n, 0..n), tries).prop_map(move |pairs| {
            let mut g = Graph::new(n);
            for (u, v) in pairs {
                let _ = g.add_edge(u, v);
            }
            g
        })
    }

    proptest! {
        #[test]
        fn round_trip(g in arbitrary_subcubic(13, 22)) {
            let s = encode(&g).unwrap();
            prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
            prop_assert_eq!(decode(&s).unwrap(), g);
        }
    }
}
