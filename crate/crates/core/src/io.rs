//! Flat-file formats: edge lists and degree sequences.
//!
//! Both input formats are line oriented. Blank lines and lines whose first
//! non-space character is `#` are skipped. An edge list has two
//! non-negative integers per line; a degree sequence has one.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::graph::{normalize, Graph, VertexId};
use crate::models::DegreeSequence;

/// Graph read from an edge list. File ids are relabelled densely in order of
/// first appearance; `labels[v]` is the id vertex `v` had in the file.
#[derive(Clone, Debug)]
pub struct EdgeListGraph {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum InputKind {
    #[serde(rename = "edges")]
    EdgeList,
    #[serde(rename = "degrees")]
    DegreeSequence,
}

impl std::str::FromStr for InputKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "edges" => Ok(Self::EdgeList),
            "degrees" => Ok(Self::DegreeSequence),
            other => Err(format!("unknown input kind `{other}` (edges|degrees)")),
        }
    }
}

#[derive(Clone, Debug)]
pub enum InputFile {
    EdgeList(EdgeListGraph),
    DegreeSequence(DegreeSequence),
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some((i + 1, trimmed))
    })
}

fn parse_id(token: &str, line: usize) -> Result<u64, ParseError> {
    token
        .parse::<u64>()
        .map_err(|_| ParseError::line(line, format!("`{token}` is not a non-negative integer")))
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListGraph, ParseError> {
    let mut dense: HashMap<u64, VertexId> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut seen: FxHashSet<(VertexId, VertexId)> = FxHashSet::default();
    let mut edges = Vec::new();

    for (line, content) in data_lines(text) {
        let mut tokens = content.split_whitespace();
        let (Some(a), Some(b), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(ParseError::line(line, "expected exactly two vertex ids"));
        };
        let (a, b) = (parse_id(a, line)?, parse_id(b, line)?);
        if a == b {
            return Err(ParseError::line(line, format!("self-loop on vertex {a}")));
        }
        let mut intern = |id: u64| {
            *dense.entry(id).or_insert_with(|| {
                labels.push(id);
                (labels.len() - 1) as VertexId
            })
        };
        let (u, v) = (intern(a), intern(b));
        if !seen.insert(normalize(u, v)) {
            return Err(ParseError::line(line, format!("duplicate edge {a} {b}")));
        }
        edges.push((u, v));
    }
    if labels.is_empty() {
        return Err(ParseError::Empty);
    }
    let graph = Graph::from_edges(labels.len(), edges).expect("relabelled ids are in range");
    Ok(EdgeListGraph { graph, labels })
}

pub fn parse_degree_sequence(text: &str) -> Result<DegreeSequence, ParseError> {
    let mut degrees = Vec::new();
    for (line, content) in data_lines(text) {
        let mut tokens = content.split_whitespace();
        let (Some(token), None) = (tokens.next(), tokens.next()) else {
            return Err(ParseError::line(line, "expected a single degree"));
        };
        let d = parse_id(token, line)?;
        let d = u32::try_from(d).map_err(|_| ParseError::line(line, "degree too large"))?;
        degrees.push(d);
    }
    if degrees.is_empty() {
        return Err(ParseError::Empty);
    }
    Ok(DegreeSequence(degrees))
}

/// Decides the format from the first data line: two columns is an edge list,
/// one column a degree sequence.
pub fn detect_kind(text: &str) -> Result<InputKind, ParseError> {
    let (line, first) = data_lines(text).next().ok_or(ParseError::Empty)?;
    match first.split_whitespace().count() {
        1 => Ok(InputKind::DegreeSequence),
        2 => Ok(InputKind::EdgeList),
        _ => Err(ParseError::line(
            line,
            "cannot tell edge list from degree sequence",
        )),
    }
}

pub fn parse_input(text: &str, kind: Option<InputKind>) -> Result<InputFile, ParseError> {
    let kind = match kind {
        Some(k) => k,
        None => detect_kind(text)?,
    };
    Ok(match kind {
        InputKind::EdgeList => InputFile::EdgeList(parse_edge_list(text)?),
        InputKind::DegreeSequence => InputFile::DegreeSequence(parse_degree_sequence(text)?),
    })
}

pub fn read_to_string(path: &Path) -> Result<String, ParseError> {
    std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_input(path: &Path, kind: Option<InputKind>) -> Result<InputFile, ParseError> {
    parse_input(&read_to_string(path)?, kind)
}

pub fn read_degree_sequence(path: &Path) -> Result<DegreeSequence, ParseError> {
    parse_degree_sequence(&read_to_string(path)?)
}

/// One `u v` line per edge, in lexicographic order so output is stable.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(g.edge_count() * 12);
    for (u, v) in g.sorted_edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
