//! graph6 encoder/decoder (short form, n ≤ 62, plus the 3-byte extended
//! vertex count). Decoded vertices are relabeled `1..=n`, preserving the
//! graph6 order `0..n-1` shifted by one.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} outside graph6 range 63..=126")]
    OutOfRange { offset: usize, byte: u8 },
    #[error("byte {offset}: truncated bit field, expected {expected} data characters")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: trailing data after bit field")]
    TrailingData { offset: usize },
    #[error("byte {offset}: malformed vertex count header")]
    BadHeader { offset: usize },
    #[error("graph has no vertices")]
    ZeroVertices,
    #[error("graph too large for graph6 encoding here (n = {0})")]
    TooLarge(usize),
}

fn data_chars(n: usize) -> usize {
    let bits = n * (n.saturating_sub(1)) / 2;
    bits.div_ceil(6)
}

/// Decode a graph6 string.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::OutOfRange { offset, byte: b });
        }
    }
    // Vertex count: single byte for n <= 62, or 126 followed by 18 bits.
    let (n, body_start) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            // 126 126 + 36 bits would allow n up to 2^36; beyond scope here.
            return Err(Graph6Error::BadHeader { offset: 1 });
        }
        if bytes.len() < 4 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    let expected = data_chars(n);
    let body = &bytes[body_start..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: body_start + expected,
        });
    }

    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    // Upper triangle, column by column: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            let byte = body[bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                edges.push((i as u32 + 1, j as u32 + 1));
            }
            bit_index += 1;
        }
    }
    Ok(Graph::new(n as u32, &edges).expect("decoded edges are valid by construction"))
}

/// Encode a graph as graph6. Arbitrary labels are mapped to `0..n-1` in
/// sorted order.
pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > 258047 {
        return Err(Graph6Error::TooLarge(n));
    }
    let labels: Vec<u32> = g.vertices().collect();
    let index_of = |v: u32| labels.binary_search(&v).unwrap();

    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }

    let mut adjacency = vec![false; n * n];
    for (a, b) in g.edges() {
        let (i, j) = (index_of(a), index_of(b));
        adjacency[i * n + j] = true;
        adjacency[j * n + i] = true;
    }

    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adjacency[i * n + j] as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    Ok(String::from_utf8(out).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn single_edge() {
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn five_vertex_roundtrip() {
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(emit_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn empty_input() {
        assert_eq!(parse_graph6("").unwrap_err(), Graph6Error::Empty);
    }

    #[test]
    fn out_of_range_byte() {
        assert_eq!(
            parse_graph6("A\u{1f}").unwrap_err(),
            Graph6Error::OutOfRange { offset: 1, byte: 0x1f }
        );
    }

    #[test]
    fn truncated_body() {
        assert!(matches!(
            parse_graph6("D?").unwrap_err(),
            Graph6Error::Truncated { .. }
        ));
    }

    #[test]
    fn trailing_data() {
        assert!(matches!(
            parse_graph6("A__").unwrap_err(),
            Graph6Error::TrailingData { .. }
        ));
    }

    #[test]
    fn known_encodings() {
        // Hand-decoded: K_3 packs bits 111000 -> 'w', P_4 packs 101001 -> 'h'.
        assert_eq!(emit_graph6(&crate::graph::Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(emit_graph6(&crate::graph::Graph::path(4)).unwrap(), "Ch");
        assert_eq!(parse_graph6("Ch").unwrap(), crate::graph::Graph::path(4));
    }

    #[test]
    fn noncontiguous_labels_relabel_on_emit() {
        let g = crate::graph::Graph::path(4).delete_vertex(2).unwrap();
        assert_eq!(g.vertex_set(), VertexSet::from([1, 3, 4]));
        let s = emit_graph6(&g).unwrap();
        let back = parse_graph6(&s).unwrap();
        assert_eq!(back.vertex_count(), 3);
        assert_eq!(back.edge_count(), 1);
    }
}
