//! Text codecs: bit-exact graph6 records and a plain edge-list format.
//!
//! graph6 layout: header byte `n + 63` for `0 <= n <= 62`, then the upper
//! triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into
//! 6-bit groups, zero-padded to a multiple of 6, each group stored as
//! `group + 63`. Extended headers (leading byte 126) are out of scope.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn graph6_body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes one graph6 record. Trailing `\n` / `\r\n` is tolerated.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut line = line;
    while let [rest @ .., b'\n' | b'\r'] = line {
        line = rest;
    }
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };

    let &header = line.first().ok_or_else(|| err(0, "empty record"))?;
    if header == 126 {
        return Err(err(0, "extended length header (n > 62) not supported"));
    }
    if !(63..=126).contains(&header) {
        return Err(err(0, "length header byte outside 63..126"));
    }
    let n = (header - 63) as usize;
    if n == 0 {
        return Err(err(0, "graph of order 0"));
    }
    debug_assert!(n <= MAX_VERTICES);

    let body = &line[1..];
    let expected = graph6_body_len(n);
    if body.len() < expected {
        return Err(err(
            line.len(),
            "body shorter than ceil(n(n-1)/2 / 6) bytes",
        ));
    }
    if body.len() > expected {
        return Err(err(
            1 + expected,
            "body longer than ceil(n(n-1)/2 / 6) bytes",
        ));
    }

    let mut g = Graph::edgeless(n);
    let mut bit = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = body[bit / 6];
            if !(63..=126).contains(&byte) {
                return Err(err(1 + bit / 6, "body byte outside 63..126"));
            }
            if (byte - 63) >> (5 - bit % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
            if bit == n * (n - 1) / 2 {
                break 'outer;
            }
        }
    }
    Ok(g)
}

/// Encodes a graph byte-for-byte under its current labeling.
/// `parse_graph6(encode_graph6(g))` reproduces `g` exactly.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + graph6_body_len(n));
    out.push(n as u8 + 63);
    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group = group << 1 | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses the edge-list format: first line `n m`, then `m` lines `u v` with
/// `0 <= u,v < n` and `u != v`. Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let err = |line: usize, reason: String| Error::EdgeList { line, reason };
    let mut lines = text.lines().enumerate();

    let (_, head) = lines
        .next()
        .ok_or_else(|| err(1, "missing header line".into()))?;
    let mut it = head.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(1, format!("expected `n m`, got {head:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(1, format!("expected `n m`, got {head:?}")))?;
    if it.next().is_some() {
        return Err(err(1, format!("trailing tokens after `n m` in {head:?}")));
    }
    if n == 0 || n > MAX_VERTICES {
        return Err(err(
            1,
            format!("vertex count {n} outside 1..={MAX_VERTICES}"),
        ));
    }

    let mut g = Graph::edgeless(n);
    let mut read = 0usize;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if read == m {
            return Err(err(lineno, format!("more than m={m} edge lines")));
        }
        let mut it = line.split_whitespace();
        let parse = |t: Option<&str>| -> Result<usize> {
            t.and_then(|t| t.parse().ok())
                .ok_or_else(|| err(lineno, format!("expected `u v`, got {line:?}")))
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(err(lineno, format!("trailing tokens in {line:?}")));
        }
        if u >= n || v >= n {
            return Err(err(lineno, format!("vertex id out of range in {line:?}")));
        }
        if u == v {
            return Err(err(lineno, format!("loop at vertex {u}")));
        }
        g.add_edge(u, v);
        read += 1;
    }
    if read < m {
        return Err(err(
            text.lines().count(),
            format!("expected m={m} edge lines, found {read}"),
        ));
    }
    Ok(g)
}
