//! Text formats.
//!
//! Graphs travel in a DIMACS-like format: `c` comment lines, one
//! `p edge <n> <m>` header, then `m` lines `e <u> <v>` with 1-based
//! endpoints. The same format with duplicate `e` lines and `e v v` loops
//! allowed carries multigraphs. A single graph6 line is accepted as an
//! alternative input encoding for simple graphs. Orientations are written
//! as `p arc <n> <m>` followed by `a <u> <v>` lines (1-based, directed
//! u to v). Vertex sets are plain whitespace-separated 0-based indices,
//! `c` comment lines allowed.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::multigraph::{Multigraph, Orientation};

struct Header {
    n: usize,
    m: usize,
    line_no: usize,
}

/// Parses comment and header lines; returns the header and the remaining
/// `(line_no, line)` pairs.
fn parse_header<'a>(text: &'a str, kind: &str) -> Result<(Header, Vec<(usize, &'a str)>)> {
    let mut header = None;
    let mut rest = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(body) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(Error::parse(line_no, "duplicate `p` header"));
            }
            let mut parts = body.split_whitespace();
            let fmt = parts.next().unwrap_or_default();
            if fmt != kind {
                return Err(Error::parse(
                    line_no,
                    format!("expected `p {kind} <n> <m>`, found format `{fmt}`"),
                ));
            }
            let n = parse_number(parts.next(), line_no, "vertex count")?;
            let m = parse_number(parts.next(), line_no, "edge count")?;
            if parts.next().is_some() {
                return Err(Error::parse(line_no, "trailing tokens after header"));
            }
            header = Some(Header { n, m, line_no });
        } else {
            rest.push((line_no, line));
        }
    }
    let header = header.ok_or_else(|| Error::parse(0, format!("missing `p {kind}` header")))?;
    Ok((header, rest))
}

fn parse_number(token: Option<&str>, line_no: usize, what: &str) -> Result<usize> {
    token
        .ok_or_else(|| Error::parse(line_no, format!("missing {what}")))?
        .parse()
        .map_err(|_| Error::parse(line_no, format!("invalid {what}")))
}

fn parse_edge_line(line: &str, line_no: usize, n: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    match parts.next() {
        Some("e") => {}
        _ => return Err(Error::parse(line_no, "expected `e <u> <v>`")),
    }
    let u = parse_number(parts.next(), line_no, "endpoint")?;
    let v = parse_number(parts.next(), line_no, "endpoint")?;
    if parts.next().is_some() {
        return Err(Error::parse(line_no, "trailing tokens after edge"));
    }
    if u == 0 || v == 0 || u > n || v > n {
        return Err(Error::parse(
            line_no,
            format!("endpoint out of range 1..={n}"),
        ));
    }
    Ok((u - 1, v - 1))
}

fn looks_like_dimacs(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('c'))
        .is_some_and(|l| l.starts_with('p'))
}

/// Reads a simple graph from either the DIMACS-like format or a single
/// graph6 line (auto-detected).
pub fn read_graph(text: &str) -> Result<Graph> {
    if looks_like_dimacs(text) {
        read_graph_dimacs(text)
    } else {
        let line = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| Error::parse(0, "empty input"))?;
        decode_graph6(line)
    }
}

pub fn read_graph_dimacs(text: &str) -> Result<Graph> {
    let (header, lines) = parse_header(text, "edge")?;
    let mut edges = Vec::with_capacity(header.m);
    for (line_no, line) in lines {
        edges.push(parse_edge_line(line, line_no, header.n)?);
    }
    if edges.len() != header.m {
        return Err(Error::parse(
            header.line_no,
            format!("header announces {} edges, found {}", header.m, edges.len()),
        ));
    }
    Graph::from_edges(header.n, &edges)
}

pub fn write_graph_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn read_multigraph(text: &str) -> Result<Multigraph> {
    let (header, lines) = parse_header(text, "edge")?;
    let mut mg = Multigraph::new(header.n);
    for (line_no, line) in lines {
        let (u, v) = parse_edge_line(line, line_no, header.n)?;
        mg.add_edge(u, v)?;
    }
    if mg.edge_count() != header.m {
        return Err(Error::parse(
            header.line_no,
            format!(
                "header announces {} edges, found {}",
                header.m,
                mg.edge_count()
            ),
        ));
    }
    Ok(mg)
}

pub fn write_multigraph_dimacs(m: &Multigraph) -> String {
    let mut out = format!("p edge {} {}\n", m.n(), m.edge_count());
    for e in m.edges() {
        out.push_str(&format!("e {} {}\n", e.u + 1, e.v + 1));
    }
    out
}

/// Arc format for orientations: `p arc <n> <m>` then one `a <u> <v>` per
/// edge in edge-id order.
pub fn write_orientation(d: &Orientation) -> String {
    let mut out = format!("p arc {} {}\n", d.n(), d.multigraph().edge_count());
    for (tail, head, _) in d.arcs() {
        out.push_str(&format!("a {} {}\n", tail + 1, head + 1));
    }
    out
}

/// Plain vertex-set file: whitespace-separated 0-based indices; `c` lines
/// are comments.
pub fn read_vertex_set(text: &str, universe: usize) -> Result<VertexSet> {
    let mut members = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        for token in line.split_whitespace() {
            let v: usize = token
                .parse()
                .map_err(|_| Error::parse(idx + 1, format!("invalid vertex `{token}`")))?;
            members.push(v);
        }
    }
    VertexSet::from_members(universe, members)
}

pub fn write_vertex_set(s: &VertexSet) -> String {
    let mut out = String::new();
    for v in s.iter() {
        out.push_str(&format!("{v}\n"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Encodes a simple graph as graph6 (supports n < 258048).
pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else if n <= 258_047 {
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    } else {
        return Err(Error::InfeasibleParameters(
            "graph6 writer supports at most 258047 vertices".into(),
        ));
    }
    let mut bit_buf = 0u8;
    let mut bit_count = 0;
    for col in 1..n {
        for row in 0..col {
            bit_buf = (bit_buf << 1) | u8::from(g.has_edge(row, col));
            bit_count += 1;
            if bit_count == 6 {
                bytes.push(63 + bit_buf);
                bit_buf = 0;
                bit_count = 0;
            }
        }
    }
    if bit_count > 0 {
        bit_buf <<= 6 - bit_count;
        bytes.push(63 + bit_buf);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ascii"))
}

/// Decodes a graph6 line (optional `>>graph6<<` header accepted).
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line).trim();
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::parse(1, "empty graph6 line"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(1, format!("invalid graph6 byte {b}")));
        }
    }
    let (n, offset) = if bytes[0] == 126 {
        if bytes.len() < 4 {
            return Err(Error::parse(1, "truncated graph6 size"));
        }
        if bytes[1] == 126 {
            return Err(Error::parse(1, "graph6 sizes beyond 258047 unsupported"));
        }
        let n = (((bytes[1] - 63) as usize) << 12)
            | (((bytes[2] - 63) as usize) << 6)
            | ((bytes[3] - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let pair_count = n * n.saturating_sub(1) / 2;
    let need = pair_count.div_ceil(6);
    if bytes.len() - offset != need {
        return Err(Error::parse(
            1,
            format!(
                "graph6 on {n} vertices needs {need} data bytes, found {}",
                bytes.len() - offset
            ),
        ));
    }
    let mut bits = Vec::with_capacity(pair_count);
    for &b in &bytes[offset..] {
        let v = b - 63;
        for shift in (0..6).rev() {
            bits.push((v >> shift) & 1 == 1);
        }
    }
    // Non-canonical padding bits must be zero.
    if bits[pair_count..].iter().any(|&b| b) {
        return Err(Error::parse(1, "nonzero padding bits in graph6 data"));
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for col in 1..n {
        for row in 0..col {
            if bits[idx] {
                edges.push((row, col));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
