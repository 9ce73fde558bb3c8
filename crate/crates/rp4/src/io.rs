//! Facet-list files, move traces and cycle notation.
//!
//! The `fl` format:
//!
//! ```text
//! d=2 n=4 f=4
//! # label 1 north
//! 1 2 3
//! 1 2 4
//! 1 3 4
//! 2 3 4
//! ```
//!
//! The bracket format is a single nested list, `[[1,2,3],[1,2,4],...]`,
//! with whitespace ignored. [`parse_complex`] tells the two apart by the
//! first non-blank character.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;

use rp4_core::complex::{ComplexError, Involution, Simplex, SimplicialComplex, Vertex};
use rp4_core::flips::BistellarMove;
use rp4_core::symmetry::Permutation;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("{0}")]
    Complex(ComplexError),
}

impl From<ComplexError> for IoError {
    fn from(e: ComplexError) -> Self {
        IoError::Complex(e)
    }
}

fn malformed(line: usize, message: impl Into<String>) -> IoError {
    IoError::Malformed { line, message: message.into() }
}

/// Output format for complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Fl,
    Bracket,
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, IoError> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(Path::new(path)).map(|t| text = t)
    };
    res.map_err(|source| IoError::Io { path: path.to_string(), source })?;
    Ok(text)
}

/// Writes to a file, or standard output for `-`.
pub fn write_sink(path: &str, text: &str) -> Result<(), IoError> {
    let res = if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes()).and_then(|_| out.flush())
    } else {
        std::fs::write(path, text)
    };
    res.map_err(|source| IoError::Io { path: path.to_string(), source })
}

pub fn load_complex(path: &str) -> Result<SimplicialComplex, IoError> {
    parse_complex(&read_source(path)?)
}

/// Parses either format.
pub fn parse_complex(text: &str) -> Result<SimplicialComplex, IoError> {
    if text.trim_start().starts_with('[') {
        parse_bracket(text)
    } else {
        parse_fl(text)
    }
}

fn parse_vertex(tok: &str, line: usize) -> Result<Vertex, IoError> {
    match tok.parse::<Vertex>() {
        Ok(0) => Err(malformed(line, "vertex ids start at 1")),
        Ok(v) => Ok(v),
        Err(_) => Err(malformed(line, format!("bad vertex {tok:?}"))),
    }
}

fn parse_header(line: &str) -> Result<(usize, usize, usize), IoError> {
    let mut fields = BTreeMap::new();
    for tok in line.split_whitespace() {
        let (k, v) = tok.split_once('=').ok_or_else(|| malformed(1, format!("bad header field {tok:?}")))?;
        let v: usize = v.parse().map_err(|_| malformed(1, format!("bad header value {tok:?}")))?;
        if fields.insert(k, v).is_some() {
            return Err(malformed(1, format!("repeated header field {k:?}")));
        }
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| malformed(1, format!("header lacks {k}=")));
    if fields.len() != 3 {
        return Err(malformed(1, "header must be d=<dim> n=<vertices> f=<facets>"));
    }
    Ok((get("d")?, get("n")?, get("f")?))
}

pub fn parse_fl(text: &str) -> Result<SimplicialComplex, IoError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (_, header) = lines.next().ok_or_else(|| malformed(1, "empty input"))?;
    let (d, n, f) = parse_header(header)?;
    let mut facets = Vec::new();
    let mut labels = BTreeMap::new();
    for (no, line) in lines {
        if let Some(rest) = line.strip_prefix('#') {
            if let Some(rest) = rest.trim_start().strip_prefix("label") {
                let rest = rest.trim_start();
                let (id, label) = rest.split_once(char::is_whitespace).ok_or_else(|| malformed(no, "label needs an id and a string"))?;
                labels.insert(parse_vertex(id, no)?, label.trim().to_string());
            }
            continue;
        }
        let vs = line.split_whitespace().map(|t| parse_vertex(t, no)).collect::<Result<Vec<_>, _>>()?;
        if vs.windows(2).any(|w| w[0] >= w[1]) {
            return Err(malformed(no, "facet vertices must be strictly increasing"));
        }
        facets.push(Simplex::new(vs).map_err(|e| malformed(no, e.to_string()))?);
    }
    if facets.len() != f {
        return Err(malformed(1, format!("header says f={f}, found {} facets", facets.len())));
    }
    let c = SimplicialComplex::new(facets)?;
    if c.n_facets() != f {
        return Err(malformed(1, "repeated facet"));
    }
    if c.dim() != d as isize || c.n_vertices() != n {
        return Err(malformed(1, format!("header says d={d} n={n}, found d={} n={}", c.dim(), c.n_vertices())));
    }
    if let Some(v) = labels.keys().find(|v| !c.has_vertex(**v)) {
        return Err(malformed(1, format!("label for unknown vertex {v}")));
    }
    Ok(c.with_labels(labels))
}

pub fn parse_bracket(text: &str) -> Result<SimplicialComplex, IoError> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| malformed(1, "expected [[...],...]"))?;
    let mut facets = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest.strip_prefix('[').ok_or_else(|| malformed(1, "expected ["))?;
        let end = body.find(']').ok_or_else(|| malformed(1, "unclosed ["))?;
        let vs = body[..end].split(',').map(|t| parse_vertex(t, 1)).collect::<Result<Vec<_>, _>>()?;
        facets.push(Simplex::new(vs).map_err(|e| malformed(1, e.to_string()))?);
        rest = &body[end + 1..];
        if let Some(r) = rest.strip_prefix(',') {
            if r.is_empty() {
                return Err(malformed(1, "trailing comma"));
            }
            rest = r;
        } else if !rest.is_empty() {
            return Err(malformed(1, "expected , between facets"));
        }
    }
    let count = facets.len();
    let c = SimplicialComplex::new(facets)?;
    if c.n_facets() != count {
        return Err(malformed(1, "repeated facet"));
    }
    Ok(c)
}

pub fn format_fl(c: &SimplicialComplex) -> String {
    let mut out = format!("d={} n={} f={}\n", c.dim(), c.n_vertices(), c.n_facets());
    for (v, l) in c.labels() {
        let _ = writeln!(out, "# label {v} {l}");
    }
    for f in c.facets() {
        let words: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn format_bracket(c: &SimplicialComplex) -> String {
    let facets: Vec<String> = c.facets().iter().map(Simplex::to_string).collect();
    format!("[{}]\n", facets.join(","))
}

pub fn format_complex(c: &SimplicialComplex, format: Format) -> String {
    match format {
        Format::Fl => format_fl(c),
        Format::Bracket => format_bracket(c),
    }
}

/// One move per line, `out-face | in-face`.
pub fn format_trace(moves: &[BistellarMove]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}

fn parse_face(s: &str, line: usize) -> Result<Simplex, IoError> {
    let body = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| malformed(line, format!("expected [..], got {s:?}")))?;
    let vs = body.split(',').map(|t| parse_vertex(t.trim(), line)).collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vs).map_err(|e| malformed(line, e.to_string()))
}

pub fn parse_trace(text: &str) -> Result<Vec<BistellarMove>, IoError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (a, b) = line.split_once('|').ok_or_else(|| malformed(i + 1, "expected out | in"))?;
        out.push(BistellarMove::new(parse_face(a, i + 1)?, parse_face(b, i + 1)?));
    }
    Ok(out)
}

/// Parses `(1 2)(3 4)`. A token naming a vertex label of `c` means that
/// vertex; any other token must be a vertex id.
pub fn parse_cycles(text: &str, c: &SimplicialComplex) -> Result<Vec<Vec<Vertex>>, IoError> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| malformed(1, "expected ( in cycle notation"))?;
        let end = body.find(')').ok_or_else(|| malformed(1, "unclosed ( in cycle notation"))?;
        let cycle = body[..end]
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| match c.vertex_with_label(t) {
                Some(v) => Ok(v),
                None => t.parse::<Vertex>().map_err(|_| malformed(1, format!("unknown vertex {t:?}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(cycle);
        rest = body[end + 1..].trim_start();
    }
    Ok(cycles)
}

pub fn parse_involution(text: &str, c: &SimplicialComplex) -> Result<Involution, IoError> {
    let cycles = parse_cycles(text, c)?;
    if let Some(bad) = cycles.iter().find(|cy| cy.len() != 2) {
        return Err(malformed(1, format!("involution cycles must be transpositions, got {bad:?}")));
    }
    let pairs: Vec<(Vertex, Vertex)> = cycles.iter().map(|cy| (cy[0], cy[1])).collect();
    Ok(Involution::from_pairs(&pairs)?)
}

pub fn parse_permutation(text: &str, c: &SimplicialComplex) -> Result<Permutation, IoError> {
    Permutation::from_cycles(&parse_cycles(text, c)?).ok_or_else(|| malformed(1, "cycles are not disjoint"))
}
