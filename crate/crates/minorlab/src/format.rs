//! Graph text formats: the `n m` edge list, graph6, and the hex rendering of
//! the canonical form.

use std::fmt::Write as _;

use minorlab_core::graph::iso::canonical_form;
use minorlab_core::graph::{pair_count, pair_from_index, pair_index, MAX_VERTICES};
use minorlab_core::{Graph, GraphError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("canonical hex: {0}")]
    Hex(String),
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Reads any of the three formats. A lone token of hex digits starting with a
/// digit is a canonical form (graph6 never uses digits), another lone token is
/// graph6, anything else is an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let body = text.trim();
    if body.is_empty() {
        return Err(FormatError::Empty);
    }
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    if !body.contains(char::is_whitespace) {
        if body.starts_with(|c: char| c.is_ascii_digit()) && body.chars().all(|c| c.is_ascii_hexdigit()) {
            return from_hex(body);
        }
        return from_graph6(body);
    }
    parse_edge_list(text)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines.next().ok_or(FormatError::Empty)?;
    let [n, m] = two_numbers(line, header)?;
    let mut g = Graph::try_new(n)?;
    let mut seen = 0;
    for (line, l) in lines {
        let [u, v] = two_numbers(line, l)?;
        if u >= n || v >= n {
            return Err(FormatError::EdgeList { line, msg: format!("vertex out of range 0..{n}") });
        }
        if u == v {
            return Err(FormatError::EdgeList { line, msg: format!("self-loop at {u}") });
        }
        if g.has_edge(u, v) {
            return Err(FormatError::EdgeList { line, msg: format!("duplicate edge {u} {v}") });
        }
        g.add_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(FormatError::EdgeList { line: 1, msg: format!("header says {m} edges, found {seen}") });
    }
    Ok(g)
}

fn two_numbers(line: usize, l: &str) -> Result<[usize; 2], FormatError> {
    let bad = |msg: String| FormatError::EdgeList { line, msg };
    let parts: Vec<&str> = l.split_whitespace().collect();
    if parts.len() != 2 {
        return Err(bad(format!("expected two integers, got {:?}", l)));
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| bad(format!("{s:?}: {e}")));
    Ok([num(parts[0])?, num(parts[1])?])
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, ((n >> 12) & 63) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
    // upper triangle column by column is exactly pair_index order
    let bits = pair_count(n);
    for chunk in 0..bits.div_ceil(6) {
        let mut byte = 0u8;
        for j in 0..6 {
            let i = 6 * chunk + j;
            if i < bits {
                let (u, v) = pair_from_index(i);
                if g.has_edge(u, v) {
                    byte |= 0x20 >> j;
                }
            }
        }
        out.push(byte + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph, FormatError> {
    let bytes = s.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(FormatError::Graph6(format!("byte {b:#04x} outside the printable range")));
    }
    let (n, rest) = match bytes {
        [] => return Err(FormatError::Empty),
        [126, 126, ..] => return Err(FormatError::Graph6("graphs this large are not supported".into())),
        [126, a, b, c, rest @ ..] => (((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63), rest),
        [126, ..] => return Err(FormatError::Graph6("truncated size field".into())),
        [a, rest @ ..] => (*a as usize - 63, rest),
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge { n, cap: MAX_VERTICES }.into());
    }
    let bits = pair_count(n);
    if rest.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!("expected {} data bytes for n = {n}, got {}", bits.div_ceil(6), rest.len())));
    }
    let mut g = Graph::new(n);
    for (chunk, &b) in rest.iter().enumerate() {
        for j in 0..6 {
            let i = 6 * chunk + j;
            if (b - 63) & (0x20 >> j) != 0 {
                if i >= bits {
                    return Err(FormatError::Graph6("nonzero padding bits".into()));
                }
                let (u, v) = pair_from_index(i);
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Lowercase hex of the canonical form: equal strings iff isomorphic graphs.
pub fn to_canonical_hex(g: &Graph) -> String {
    canonical_form(g).to_hex()
}

/// Reads a canonical hex string back into the canonical representative.
pub fn from_hex(s: &str) -> Result<Graph, FormatError> {
    if s.is_empty() {
        return Err(FormatError::Empty);
    }
    if !s.len().is_multiple_of(2) {
        return Err(FormatError::Hex("odd number of digits".into()));
    }
    let bytes: Vec<u8> = (0..s.len())
        .step_by(2)
        .map(|i| u8::from_str_radix(&s[i..i + 2], 16).map_err(|e| FormatError::Hex(e.to_string())))
        .collect::<Result<_, _>>()?;
    let n = bytes[0] as usize;
    let mut g = Graph::try_new(n)?;
    let bits = pair_count(n);
    if bytes.len() != 1 + bits.div_ceil(8) {
        return Err(FormatError::Hex(format!("expected {} bytes for n = {n}, got {}", 1 + bits.div_ceil(8), bytes.len())));
    }
    for v in 1..n {
        for u in 0..v {
            let i = pair_index(u, v);
            if bytes[1 + i / 8] & (0x80 >> (i % 8)) != 0 {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}
