//! Text codecs: the graph6 interchange format and a plain edge-list format.
//!
//! graph6 packs the column-major upper triangle of the adjacency matrix into
//! 6-bit groups offset by 63, preceded by a size header: a single byte
//! `n + 63` for `n <= 62`, `'~'` plus three bytes (18 bits) for
//! `n <= 258047`, and `"~~"` plus six bytes (36 bits) above that.
//!
//! The edge-list format is one `"n m"` line followed by `m` lines `"u v"`.

use crate::error::{Error, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn bit_index(i: usize, j: usize) -> usize {
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// Encodes a graph as a graph6 line (no trailing newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let nbits = n * n.saturating_sub(1) / 2;
    let mut bits = vec![false; nbits];
    for e in g.edges() {
        bits[bit_index(e.u(), e.v())] = true;
    }
    for chunk in bits.chunks(6) {
        let mut group = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                group |= 1 << (5 - k);
            }
        }
        out.push(group + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 line. Trailing `\r`/`\n` are tolerated; anything else
/// past the adjacency payload is an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedHeader { reason: "empty input".into() });
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::MalformedHeader {
                reason: format!("byte {b:#x} outside the graph6 alphabet"),
            });
        }
    }

    let (n, header_len) = if bytes[0] != b'~' {
        ((bytes[0] - OFFSET) as usize, 1)
    } else if bytes.len() >= 2 && bytes[1] != b'~' {
        if bytes.len() < 4 {
            return Err(Error::MalformedHeader { reason: "short extended header".into() });
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        (n, 4)
    } else {
        if bytes.len() < 8 {
            return Err(Error::MalformedHeader { reason: "short extended header".into() });
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - OFFSET) as usize;
        }
        (n, 8)
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let data_bytes = nbits.div_ceil(6);
    let got = bytes.len() - header_len;
    if got < data_bytes {
        return Err(Error::TruncatedBits { expected_bytes: data_bytes, got_bytes: got });
    }
    if got > data_bytes {
        return Err(Error::TrailingGarbage { extra_bytes: got - data_bytes });
    }

    let data = &bytes[header_len..];
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let pos = bit_index(i, j);
            let group = data[pos / 6] - OFFSET;
            if (group >> (5 - pos % 6)) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

/// Emits the plain edge-list text form: `"n m"` then one `"u v"` line per edge.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.u(), e.v()));
    }
    out
}

/// Parses the plain edge-list text form.
pub fn parse_edge_list_text(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lineno, header) = lines
        .next()
        .ok_or(Error::EdgeListSyntax { line: 1, reason: "missing \"n m\" header line".into() })?;
    let mut it = header.split_whitespace();
    let parse_num = |tok: Option<&str>, lineno: usize| -> Result<usize> {
        tok.ok_or(Error::EdgeListSyntax {
            line: lineno + 1,
            reason: "expected two integers".into(),
        })?
        .parse()
        .map_err(|_| Error::EdgeListSyntax { line: lineno + 1, reason: "invalid integer".into() })
    };
    let n = parse_num(it.next(), lineno)?;
    let m = parse_num(it.next(), lineno)?;
    if it.next().is_some() {
        return Err(Error::EdgeListSyntax {
            line: lineno + 1,
            reason: "extra tokens on header".into(),
        });
    }

    let mut pairs = Vec::with_capacity(m);
    for _ in 0..m {
        let (lineno, line) = lines
            .next()
            .ok_or(Error::EdgeListSyntax { line: 0, reason: format!("expected {m} edge lines") })?;
        let mut it = line.split_whitespace();
        let u = parse_num(it.next(), lineno)?;
        let v = parse_num(it.next(), lineno)?;
        if it.next().is_some() {
            return Err(Error::EdgeListSyntax {
                line: lineno + 1,
                reason: "extra tokens on edge".into(),
            });
        }
        pairs.push((u, v));
    }
    if let Some((lineno, _)) = lines.next() {
        return Err(Error::EdgeListSyntax { line: lineno + 1, reason: "trailing content".into() });
    }
    Graph::from_edge_list(n, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a_underscore_is_k2() {
        // Decoded by hand: header 'A' = 2 vertices, payload '_' = 0b100000,
        // so the single upper-triangle bit (0,1) is set.
        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn empty_input_is_malformed() {
        assert!(matches!(parse_graph6(""), Err(Error::MalformedHeader { .. })));
    }

    #[test]
    fn truncated_and_trailing_are_distinguished() {
        // C_4 on 4 vertices needs exactly one payload byte.
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let s = to_graph6(&g);
        assert_eq!(s.len(), 2);
        assert!(matches!(parse_graph6(&s[..1]), Err(Error::TruncatedBits { .. })));
        let long = format!("{s}?");
        assert!(matches!(parse_graph6(&long), Err(Error::TrailingGarbage { .. })));
    }

    #[test]
    fn round_trip_small() {
        for (n, pairs) in [
            (1usize, vec![]),
            (2, vec![(0, 1)]),
            (4, vec![(0, 1), (1, 2), (2, 3), (3, 0)]),
            (6, vec![(0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5)]),
        ] {
            let g = Graph::from_edge_list(n, &pairs).unwrap();
            let s = to_graph6(&g);
            let h = parse_graph6(&s).unwrap();
            assert_eq!(g, h);
            assert_eq!(to_graph6(&h), s);
        }
    }

    #[test]
    fn round_trip_extended_header() {
        // 70 vertices forces the three-byte size header.
        let pairs: Vec<(usize, usize)> = (0..69).map(|i| (i, i + 1)).collect();
        let g = Graph::from_edge_list(70, &pairs).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let text = to_edge_list_text(&g);
        assert!(text.starts_with("5 3\n"));
        assert_eq!(parse_edge_list_text(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_garbage() {
        assert!(matches!(parse_edge_list_text(""), Err(Error::EdgeListSyntax { .. })));
        assert!(matches!(parse_edge_list_text("2 x\n"), Err(Error::EdgeListSyntax { .. })));
        assert!(matches!(
            parse_edge_list_text("2 1\n0 1\n9 9\n"),
            Err(Error::EdgeListSyntax { .. })
        ));
    }
}
