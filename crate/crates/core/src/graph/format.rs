//! Text formats: graph6 and the plain edge list (`n m` header, then `u v` lines).

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

const GRAPH6_HEADER: &str = ">>graph6<<";

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedGraph6(msg.into())
}

fn encode_order(n: usize, out: &mut String) {
    let push6 = |out: &mut String, v: usize| out.push((63 + (v & 0x3f) as u8) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, n >> shift);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, n >> shift);
        }
    }
}

/// graph6 encoding: the upper triangle is read column by column
/// (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed six bits per byte.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(malformed("empty input"));
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(malformed(format!("byte {b:#04x} at offset {i} is outside 63..=126")));
        }
        values.push(b - 63);
    }
    let (n, body) = match values.as_slice() {
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(malformed("truncated 36-bit order"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &v| (acc << 6) | v as usize);
            (n, &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed("truncated 18-bit order"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &v| (acc << 6) | v as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => (*first as usize, rest),
        [] => unreachable!(),
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(malformed(format!(
            "expected {expected} adjacency bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bit_count..expected * 6).any(bit) {
        return Err(malformed("nonzero padding bits"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

fn edge_err(msg: impl Into<String>) -> Error {
    Error::MalformedEdgeList(msg.into())
}

/// Parses `n m` followed by `m` lines `u v`. Blank lines and `#` comments are skipped.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| edge_err("missing `n m` header"))?;
    let nums = parse_pair(header)?;
    let (n, m) = (nums.0, nums.1);
    let mut edges = Vec::with_capacity(m);
    for line in lines.by_ref() {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(edge_err(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(edge_err(format!("expected two non-negative integers, got `{line}`"))),
    }
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
