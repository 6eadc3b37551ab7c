//! Text formats: graph6 (simple graphs, n <= 62), the MEL multigraph edge
//! list, and the one-pair-per-line matching listing.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::matching::Matching;

/// Largest order encodable with a single graph6 size byte.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Mel,
}

impl GraphFormat {
    /// `.g6`/`.graph6` map to graph6, `.mel`/`.txt` to MEL.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(GraphFormat::Graph6),
            "mel" | "txt" => Some(GraphFormat::Mel),
            _ => None,
        }
    }

    pub fn parse(self, text: &str) -> Result<Multigraph> {
        match self {
            GraphFormat::Graph6 => parse_graph6(text),
            GraphFormat::Mel => parse_mel(text),
        }
    }
}

fn parse_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        offset,
        message: message.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Multigraph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    while let Some((&last, rest)) = bytes.split_last() {
        if last.is_ascii_whitespace() {
            bytes = rest;
        } else {
            break;
        }
    }
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| parse_err(base, "empty graph6 string"))?;
    if !(63..=126).contains(&head) {
        return Err(parse_err(base, format!("invalid size byte {head:#04x}")));
    }
    if head == 126 {
        return Err(parse_err(
            base,
            format!("orders above {GRAPH6_MAX_ORDER} are not supported"),
        ));
    }
    let n = usize::from(head - 63);
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if body.len() < needed {
        return Err(parse_err(
            base + 1 + body.len(),
            format!("truncated bit vector: {} of {needed} bytes", body.len()),
        ));
    }
    if body.len() > needed {
        return Err(parse_err(
            base + 1 + needed,
            "trailing bytes after bit vector",
        ));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(parse_err(
                base + 1 + i,
                format!("invalid data byte {b:#04x}"),
            ));
        }
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j, 1));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges)
}

pub fn write_graph6(g: &Multigraph) -> Result<String> {
    let n = g.vertex_count();
    if n > GRAPH6_MAX_ORDER {
        return Err(Error::Contract(format!(
            "graph6 output limited to {GRAPH6_MAX_ORDER} vertices"
        )));
    }
    if !g.is_simple() {
        return Err(Error::Contract(
            "graph6 cannot encode parallel edges".into(),
        ));
    }
    let mut out = String::new();
    out.push(char::from(63 + n as u8));
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((acc << (6 - filled)) + 63));
    }
    Ok(out)
}

pub fn parse_mel(text: &str) -> Result<Multigraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match n {
            None => {
                if tokens.len() != 2 || tokens[0] != "n" {
                    return Err(parse_err(line_start, "expected header `n <vertexcount>`"));
                }
                n = Some(
                    tokens[1]
                        .parse()
                        .map_err(|_| parse_err(line_start, "vertex count is not a number"))?,
                );
            }
            Some(count) => {
                if !(2..=3).contains(&tokens.len()) {
                    return Err(parse_err(line_start, "expected `u v m`"));
                }
                let num = |s: &str, what: &str| -> Result<u64> {
                    s.parse::<u64>().map_err(|_| {
                        parse_err(
                            line_start,
                            format!("{what} `{s}` is not a non-negative integer"),
                        )
                    })
                };
                let u = num(tokens[0], "vertex")? as usize;
                let v = num(tokens[1], "vertex")? as usize;
                let m = match tokens.get(2) {
                    Some(s) => num(s, "multiplicity")?,
                    None => 1,
                };
                if u == v {
                    return Err(parse_err(
                        line_start,
                        format!("loop at vertex {u}; multigraphs must be loopless"),
                    ));
                }
                if m == 0 {
                    return Err(parse_err(line_start, "multiplicity must be at least 1"));
                }
                if u >= count || v >= count {
                    return Err(parse_err(
                        line_start,
                        format!("vertex out of range for n = {count}"),
                    ));
                }
                let m = u32::try_from(m)
                    .map_err(|_| parse_err(line_start, "multiplicity too large"))?;
                edges.push((u, v, m));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing header `n <vertexcount>`"))?;
    Multigraph::new(n, edges)
}

pub fn write_mel(g: &Multigraph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.multiplicity);
    }
    out
}

/// One `u v` line per matched pair with `u < v`, lines sorted.
pub fn write_matching(m: &Matching) -> String {
    let mut out = String::new();
    for (u, v) in m.pairs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses the listing produced by [`write_matching`] into raw pairs.
pub fn parse_matching_pairs(text: &str) -> Result<Vec<(usize, usize)>> {
    let mut pairs = Vec::new();
    let mut offset = 0;
    for raw in text.split_inclusive('\n') {
        let line_start = offset;
        offset += raw.len();
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_err(line_start, "expected `u v`"));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_err(line_start, format!("`{s}` is not a vertex id")))
        };
        pairs.push((parse(tokens[0])?, parse(tokens[1])?));
    }
    Ok(pairs)
}
