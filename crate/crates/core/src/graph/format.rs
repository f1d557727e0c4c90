//! Text formats: a 1-based edge list and graph6.
//!
//! Edge list:
//!
//! ```text
//! # optional comment lines
//! n m
//! u_1 v_1
//! ...
//! u_m v_m
//! ```
//!
//! graph6 is the usual 6-bit printable encoding, restricted to `n <= 62`
//! (single-byte size field).

use std::collections::HashSet;
use std::fmt::Write;

use super::Graph;
use crate::error::{Error, Result};

pub const GRAPH6_MAX_N: usize = 62;
const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Data lines with their 1-based line numbers; comments and blanks dropped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line_no, format!("{what}: expected two integers")))?;
        tok.parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("{what}: invalid integer {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(parse_err(line_no, format!("{what}: trailing tokens")));
    }
    Ok((a, b))
}

/// Parses the edge-list format. Duplicate edges and self-loops are errors.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = data_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(text.lines().count().max(1), "missing header line `n m`"))?;
    let (n, m) = parse_pair(header_line, header, "header")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        last_line = line_no;
        if edges.len() == m {
            return Err(parse_err(
                line_no,
                format!("more than the declared {m} edges"),
            ));
        }
        let (u, v) = parse_pair(line_no, line, "edge")?;
        for w in [u, v] {
            if w == 0 || w > n {
                return Err(parse_err(
                    line_no,
                    format!("vertex {w} out of range 1..={n}"),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

/// Writes `g` in the edge-list format, edges sorted.
pub fn serialize_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a single graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!(
            "invalid byte 0x{:02x} at offset {pos}",
            bytes[pos]
        )));
    }
    let (&size_byte, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    let n = (size_byte - 63) as usize;
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!(
            "multi-byte size fields (n > {GRAPH6_MAX_N}) are not supported"
        )));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "n = {n} needs {expected} data bytes, found {}",
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i + 1, j + 1));
            }
            k += 1;
        }
    }
    if (bits..expected * 6).any(bit) {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Graph::new(n, &edges)
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > GRAPH6_MAX_N {
        return Err(Error::LimitExceeded {
            what: "graph6 encoding",
            n,
            limit: GRAPH6_MAX_N,
        });
    }
    let mut out = vec![n as u8 + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i + 1, j + 1));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Supported input formats.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Graph6,
}

/// Guesses the format: a single printable token without whitespace-separated
/// integers is graph6, anything else is an edge list.
pub fn detect_format(text: &str) -> InputFormat {
    let mut lines = data_lines(text);
    match (lines.next(), lines.next()) {
        (Some((_, first)), None)
            if !first.contains(char::is_whitespace)
                && (first.starts_with(GRAPH6_HEADER)
                    || !first.bytes().all(|b| b.is_ascii_digit())) =>
        {
            InputFormat::Graph6
        }
        _ => InputFormat::EdgeList,
    }
}

pub fn parse(text: &str, format: InputFormat) -> Result<Graph> {
    match format {
        InputFormat::EdgeList => parse_edge_list(text),
        InputFormat::Graph6 => parse_graph6(text),
    }
}
