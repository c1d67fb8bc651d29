//! Text formats.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based endpoints.
//! Cover: first line `d k`, then `k` lines `mult | x1 x2 ... | y1 y2 ...`.
//! Lines starting with `#` are comments. Writers emit canonical form, so
//! write-parse-write round-trips are byte-identical.

use std::fmt::Write as _;

use thiserror::Error;

use crate::biclique::{Biclique, CoverMultiset};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

fn bad(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(bad(0, "missing header"))?;
    let mut parts = header.split_whitespace();
    let n: usize = parse_field(&mut parts, lno, "vertex count")?;
    let m: usize = parse_field(&mut parts, lno, "edge count")?;
    if parts.next().is_some() {
        return Err(bad(lno, "trailing tokens after header"));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (lno, line) = lines
            .next()
            .ok_or(bad(0, format!("expected {m} edge lines")))?;
        let mut parts = line.split_whitespace();
        let u: usize = parse_field(&mut parts, lno, "endpoint")?;
        let v: usize = parse_field(&mut parts, lno, "endpoint")?;
        if parts.next().is_some() {
            return Err(bad(lno, "trailing tokens after edge"));
        }
        edges.push((u, v));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(bad(lno, "unexpected content after edges"));
    }
    let g = Graph::from_edges(n, &edges).map_err(|e| ParseError::Invalid(e.to_string()))?;
    if g.edge_count() != m {
        return Err(ParseError::Invalid(format!(
            "header promised {m} edges but {} are distinct",
            g.edge_count()
        )));
    }
    Ok(g)
}

fn parse_field<'a>(
    parts: &mut impl Iterator<Item = &'a str>,
    line: usize,
    what: &str,
) -> Result<usize, ParseError> {
    parts
        .next()
        .ok_or(bad(line, format!("missing {what}")))?
        .parse()
        .map_err(|e| bad(line, format!("bad {what}: {e}")))
}

pub fn write_cover(c: &CoverMultiset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", c.depth(), c.entry_count());
    for (b, mult) in c.entries() {
        let side = |s: &[usize]| {
            s.iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        let _ = writeln!(out, "{mult} | {} | {}", side(b.x()), side(b.y()));
    }
    out
}

pub fn parse_cover(text: &str) -> Result<CoverMultiset, ParseError> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(bad(0, "missing header"))?;
    let mut parts = header.split_whitespace();
    let depth: usize = parse_field(&mut parts, lno, "depth")?;
    let k: usize = parse_field(&mut parts, lno, "entry count")?;
    if parts.next().is_some() {
        return Err(bad(lno, "trailing tokens after header"));
    }
    let mut entries = Vec::with_capacity(k);
    for _ in 0..k {
        let (lno, line) = lines
            .next()
            .ok_or(bad(0, format!("expected {k} cover entries")))?;
        let fields: Vec<&str> = line.split('|').collect();
        if fields.len() != 3 {
            return Err(bad(lno, "entry needs `mult | x side | y side`"));
        }
        let mult: usize = fields[0]
            .trim()
            .parse()
            .map_err(|e| bad(lno, format!("bad multiplicity: {e}")))?;
        if mult == 0 {
            return Err(bad(lno, "multiplicity must be at least 1"));
        }
        let side = |f: &str| -> Result<Vec<usize>, ParseError> {
            f.split_whitespace()
                .map(|t| t.parse().map_err(|e| bad(lno, format!("bad vertex: {e}"))))
                .collect()
        };
        let b = Biclique::new(side(fields[1])?, side(fields[2])?)
            .map_err(|e| ParseError::Invalid(e.to_string()))?;
        entries.push((b, mult));
    }
    if let Some((lno, _)) = lines.next() {
        return Err(bad(lno, "unexpected content after entries"));
    }
    CoverMultiset::new(depth, entries).map_err(|e| ParseError::Invalid(e.to_string()))
}
