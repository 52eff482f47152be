//! graph6 encoding for graphs on at most 62 vertices.
//!
//! The size byte is `n + 63`; the body packs the upper triangle of the
//! adjacency matrix column by column (`(0,1), (0,2), (1,2), (0,3), ...`)
//! into 6-bit groups, most significant bit first, each offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Graph6Error, GraphError};
use crate::graph::Graph;

/// Largest vertex count expressible with a single size byte.
pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let text = text.trim();
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Graph6Error::BadByte(b).into());
    }
    if head == 126 {
        // "~" introduces a multi-byte size header
        return Err(if body.is_empty() {
            Graph6Error::Truncated { expected: 3, found: 0 }
        } else {
            Graph6Error::UnsupportedSize
        }
        .into());
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Truncated { expected, found: body.len() }.into());
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !nbits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        if last & ((1 << (6 - nbits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding.into());
        }
    }
    Graph::from_edge_list(n, &edges)
}

pub fn to_graph6(g: &Graph) -> Result<String, GraphError> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(GraphError::TooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::cycle;

    /// Reference decoder: expands every byte into bits first, then walks the
    /// upper triangle.
    fn oracle_edges(s: &str) -> (usize, Vec<(usize, usize)>) {
        let b = s.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bitstream = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for shift in (0..6).rev() {
                bitstream.push((v >> shift) & 1);
            }
        }
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 0..n {
            for i in 0..j {
                if bitstream[idx] == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        edges.sort();
        (n, edges)
    }

    #[test]
    fn star_example() {
        let g = parse_graph6("D?{").unwrap();
        let (n, edges) = oracle_edges("D?{");
        assert_eq!(n, 5);
        assert_eq!(edges, [(0, 4), (1, 4), (2, 4), (3, 4)]);
        let mut got: Vec<_> = g.edges().collect();
        got.sort();
        assert_eq!(got, edges);
        assert_eq!(to_graph6(&g).unwrap(), "D?{");
    }

    #[test]
    fn cycle_round_trip() {
        let c5 = cycle(5).unwrap();
        let s = to_graph6(&c5).unwrap();
        let (n, edges) = oracle_edges(&s);
        assert_eq!(n, 5);
        let mut expect: Vec<_> = c5.edges().collect();
        expect.sort();
        assert_eq!(edges, expect);
        assert_eq!(parse_graph6(&s).unwrap(), c5);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_graph6("~"),
            Err(GraphError::Graph6(Graph6Error::Truncated { .. }))
        ));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty.into()));
        assert_eq!(parse_graph6("D?"), Err(Graph6Error::Truncated { expected: 2, found: 1 }.into()));
        assert_eq!(parse_graph6("D? "), Err(Graph6Error::Truncated { expected: 2, found: 1 }.into()));
        assert_eq!(parse_graph6("D?\x7f"), Err(Graph6Error::BadByte(0x7f).into()));
        // padding bits of the last byte must be zero
        assert_eq!(parse_graph6("D?~"), Err(Graph6Error::Padding.into()));
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(to_graph6(&g).unwrap(), "@");
    }
}
