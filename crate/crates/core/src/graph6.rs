//! graph6 text format (one graph per line).
//!
//! Byte layout: the order `n` (one byte `n + 63` for `n <= 62`, or `126`
//! followed by three 6-bit bytes for larger graphs), then the upper triangle
//! in column-major order (column `v`, rows `u < v`), packed 6 bits per byte
//! MSB-first, each byte offset by 63. The short form is bit-exact per the
//! format specification; sparse6 is rejected.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::graph::Graph;
use crate::Result;

const LONG_FORM_CAP: usize = 258_047; // 2^18 - 1

/// Serializes a graph to its graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= LONG_FORM_CAP {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(Error::UnsupportedSize(alloc::format!(
            "graph6 emission capped at n <= {LONG_FORM_CAP}, got {n}"
        )));
    }
    let mut acc = 0u8;
    let mut nbits = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push(63 + acc);
    }
    // All bytes are in 63..=126, hence valid ASCII.
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parses one graph6 line.
pub fn parse_graph6(s: &str) -> Result<Graph> {
    let bytes = s.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse { offset: 0, message: "empty input".into() });
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(Error::Parse {
            offset: 0,
            message: "sparse6 input is not supported".into(),
        });
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                offset: i,
                message: alloc::format!("byte {b} outside graph6 range 63..=126"),
            });
        }
    }
    let (n, header) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1)
    } else {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(Error::UnsupportedSize(
                "graph6 order beyond 258047 is not supported".into(),
            ));
        }
        if bytes.len() < 4 {
            return Err(Error::Parse {
                offset: bytes.len(),
                message: "truncated long-form order".into(),
            });
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = header + nbits.div_ceil(6);
    if bytes.len() != need {
        return Err(Error::Parse {
            offset: bytes.len().min(need),
            message: alloc::format!("expected {need} bytes for n={n}, got {}", bytes.len()),
        });
    }
    let mut g = Graph::empty(n);
    let mut bit_idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = bytes[header + bit_idx / 6] - 63;
            let bit = (byte >> (5 - bit_idx % 6)) & 1;
            if bit == 1 {
                g.add_edge(u, v);
            }
            bit_idx += 1;
        }
    }
    // Padding bits must be zero.
    if nbits % 6 != 0 {
        let last = bytes[bytes.len() - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Error::Parse {
                offset: bytes.len() - 1,
                message: "nonzero padding bits".into(),
            });
        }
    }
    g.debug_check();
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_is_bw() {
        let g = Graph::complete(3);
        assert_eq!(emit_graph6(&g).unwrap(), "Bw");
        assert_eq!(parse_graph6("Bw").unwrap(), g);
    }

    #[test]
    fn single_vertex_is_at() {
        let g = Graph::empty(1);
        assert_eq!(emit_graph6(&g).unwrap(), "@");
        assert_eq!(parse_graph6("@").unwrap(), g);
    }

    #[test]
    fn petgraph_reference_line() {
        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4 encodes as "DQc".
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert_eq!(emit_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn malformed_bytes_report_offset() {
        match parse_graph6("B\u{19}") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_graph6(":Bw").is_err());
        assert!(parse_graph6("Bww").is_err());
    }

    #[test]
    fn roundtrip_dense() {
        for n in [0usize, 1, 2, 7, 8, 13, 62] {
            let g = Graph::complete(n);
            let s = emit_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&s).unwrap(), g, "n={n}");
        }
    }

    #[test]
    fn long_form_roundtrip() {
        let g = Graph::complete_multipartite(&[50, 50]).unwrap();
        let s = emit_graph6(&g).unwrap();
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(parse_graph6(&s).unwrap(), g);
        // order 63 boundary
        let g = Graph::star(62); // 63 vertices
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
    }
}
