//! Graph input and output formats: graph6 (bit-exact, up to 62 vertices)
//! and a plain edge list with an `n m` header line.

use thiserror::Error;
use vpg::graph::Graph;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("could not parse input: {0}")]
    Parse(String),
    #[error("graph6 output supports at most 62 vertices, got {0}")]
    TooLarge(usize),
}

/// Parses either format, deciding by shape: a line starting with two decimal
/// numbers is an edge list header, anything else is graph6. (The formats
/// cannot collide — graph6 bytes live in the range 63..=126, which contains
/// no digits and no spaces.)
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| FormatError::Parse("empty input".into()))?;
    let mut toks = first.split_whitespace();
    let looks_like_header = matches!(
        (toks.next(), toks.next()),
        (Some(a), Some(b)) if a.parse::<usize>().is_ok() && b.parse::<usize>().is_ok()
    );
    if looks_like_header {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Standard graph6: byte `n + 63`, then the upper triangle of the adjacency
/// matrix column by column, six bits per byte (MSB first), each byte offset
/// by 63. Only the short form (n <= 62) is supported.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim().strip_prefix(">>graph6<<").unwrap_or(line.trim());
    let bytes = line.as_bytes();
    let bad = |m: &str| FormatError::Parse(format!("graph6: {m}"));
    let (&head, rest) = bytes.split_first().ok_or_else(|| bad("empty"))?;
    if head == 126 {
        return Err(bad("long form (n > 62) is not supported"));
    }
    if !(63..=125).contains(&head) {
        return Err(bad("bad size byte"));
    }
    let n = (head - 63) as usize;
    let nbits = n * (n.max(1) - 1) / 2;
    if rest.len() != (nbits + 5) / 6 {
        return Err(bad("wrong length for its size byte"));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6];
            if !(63..=126).contains(&byte) {
                return Err(bad("byte out of range"));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).map_err(|e| bad(&e.to_string()))
}

pub fn emit_graph6(g: &Graph) -> Result<String, FormatError> {
    let n = g.vertex_count();
    if n > 62 {
        return Err(FormatError::TooLarge(n));
    }
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (p, &bit) in chunk.iter().enumerate() {
            b |= (bit as u8) << (5 - p);
        }
        out.push((b + 63) as char);
    }
    Ok(out)
}

/// Edge list: header `n m`, then `m` pairs of endpoints; whitespace and line
/// breaks between numbers are free-form.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| FormatError::Parse(format!("edge list: bad number {t:?}")))
    });
    let mut next = |what: &str| {
        nums.next()
            .unwrap_or_else(|| Err(FormatError::Parse(format!("edge list: missing {what}"))))
    };
    let n = next("vertex count")?;
    let m = next("edge count")?;
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        edges.push((next("edge endpoint")?, next("edge endpoint")?));
    }
    Graph::from_edges(n, &edges).map_err(|e| FormatError::Parse(format!("edge list: {e}")))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
