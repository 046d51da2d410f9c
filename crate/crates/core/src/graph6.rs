//! graph6 text encoding, restricted to the one-byte size header (n <= 62).
//!
//! Layout: byte `n + 63`, then the upper triangle read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte, most
//! significant bit first, zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const OFFSET: u8 = 63;

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + OFFSET);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one graph6 record. A single trailing line ending is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text
        .strip_suffix("\r\n")
        .or_else(|| text.strip_suffix('\n'))
        .unwrap_or(text);
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 { offset, reason: reason.to_string() };

    for (offset, &b) in bytes.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(err(offset, "byte outside the printable range 63..=126"));
        }
    }
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if header == 126 {
        return Err(err(0, "multi-byte size headers are not supported (n > 62)"));
    }
    let n = (header - OFFSET) as usize;
    if n == 0 {
        return Err(err(0, "graphs must have at least one vertex"));
    }
    debug_assert!(n <= MAX_ORDER);

    let expected = data_len(n);
    let data = &bytes[1..];
    if data.len() < expected {
        return Err(err(bytes.len(), "truncated adjacency data"));
    }
    if data.len() > expected {
        return Err(err(1 + expected, "trailing bytes after adjacency data"));
    }

    let mut rows = vec![0u64; n];
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    if bit % 6 != 0 {
        let last = data[expected - 1] - OFFSET;
        let pad = 6 - bit % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(expected, "nonzero padding bits"));
        }
    }
    Graph::from_rows(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        assert_eq!(emit_graph6(&g), "@");
    }

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(emit_graph6(&g), "A_");
        assert_eq!(parse_graph6("A_\n").unwrap(), g);
    }

    #[test]
    fn reference_strings() {
        // Values produced by networkx.to_graph6_bytes(header=False).
        let cases: &[(&str, usize, &[(usize, usize)])] = &[
            ("Bw", 3, &[(0, 1), (0, 2), (1, 2)]),
            ("Ch", 4, &[(0, 1), (1, 2), (2, 3)]),
            ("D]o", 5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]),
        ];
        for &(text, n, edges) in cases {
            let g = Graph::from_edges(n, edges).unwrap();
            assert_eq!(emit_graph6(&g), text);
            assert_eq!(parse_graph6(text).unwrap(), g);
        }
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let offset = |s: &str| match parse_graph6(s) {
            Err(Error::Graph6 { offset, .. }) => offset,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(offset(""), 0);
        assert_eq!(offset("?"), 0);
        assert_eq!(offset("A"), 1);
        assert_eq!(offset("A__"), 2);
        assert_eq!(offset("A\x01"), 1);
        assert_eq!(offset("~??"), 0);
        assert_eq!(offset("A`"), 1);
        assert_eq!(offset("Ch "), 2);
    }

    #[test]
    fn round_trip_all_small_graphs() {
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for code in 0u64..1 << pairs.len() {
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(parse_graph6(&emit_graph6(&g)).unwrap(), g);
            }
        }
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (1usize..=40).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if bits[k] {
                            edges.push((i, j));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn round_trip_random(g in arb_graph()) {
            let text = emit_graph6(&g);
            prop_assert_eq!(text.len(), 1 + data_len(g.order()));
            prop_assert_eq!(parse_graph6(&text).unwrap(), g);
        }
    }
}
