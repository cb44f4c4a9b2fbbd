//! Reading and writing graphs.
//!
//! Two formats are understood:
//!
//! * JSON: `{"n": 3, "edges": [[1, 2], [2, 3]], "adjacency_order": {"2": [3, 1]}}`
//!   where `adjacency_order` is optional and unknown fields are ignored.
//! * Edge list: a first line `n m` followed by `m` lines `u v`. Blank lines
//!   and lines starting with `#` are skipped.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    /// JSON if the first non-blank character is `{`, edge list otherwise.
    #[default]
    Auto,
    Json,
    Edges,
}

#[derive(Deserialize, Serialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    adjacency_order: BTreeMap<String, Vec<usize>>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    let format = match format {
        Format::Auto if text.trim_start().starts_with('{') => Format::Json,
        Format::Auto => Format::Edges,
        f => f,
    };
    match format {
        Format::Json => parse_json(text),
        _ => parse_edge_list(text),
    }
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let raw: GraphJson =
        serde_json::from_str(text).map_err(|e| parse_error(e.line(), e.column(), e.to_string()))?;
    let mut order = BTreeMap::new();
    for (key, list) in raw.adjacency_order {
        let v: usize = key
            .trim()
            .parse()
            .map_err(|_| parse_error(0, 0, format!("adjacency_order key {key:?} is not a vertex")))?;
        order.insert(v, list);
    }
    let edges: Vec<_> = raw.edges.iter().map(|e| (e[0], e[1])).collect();
    Graph::with_adjacency_order(raw.n, &edges, &order)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input, expected \"n m\""))?;
    let [n, m] = two_numbers(first, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines.by_ref().take(m) {
        let [u, v] = two_numbers(line, body)?;
        edges.push((u, v));
        if n > 0 {
            Graph::new(n, &edges).map_err(|e| parse_error(line, 1, e.to_string()))?;
        }
    }
    if edges.len() < m {
        return Err(parse_error(
            first,
            1,
            format!("header announces {m} edges but only {} follow", edges.len()),
        ));
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_error(line, 1, format!("more than the announced {m} edges")));
    }
    Graph::new(n, &edges).map_err(|e| parse_error(first, 1, e.to_string()))
}

fn two_numbers(line: usize, body: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = body.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_error(
            line,
            1,
            format!("expected two integers, found {:?}", body),
        ));
    }
    let mut out = [0; 2];
    let mut offset = 0;
    for (k, f) in fields.iter().enumerate() {
        let start = offset + body[offset..].find(f).unwrap_or(0);
        offset = start + f.len();
        let column = start + 1;
        out[k] = f
            .parse()
            .map_err(|_| parse_error(line, column, format!("{f:?} is not a non-negative integer")))?;
    }
    Ok(out)
}

pub fn read_graph(path: &Path, format: Format) -> std::io::Result<Result<Graph>> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_graph(&text, format))
}

/// JSON text; `adjacency_order` is written only where it differs from ascending.
pub fn to_json(g: &Graph) -> String {
    let raw = GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        adjacency_order: g
            .custom_adjacency_order()
            .into_iter()
            .map(|(v, l)| (v.to_string(), l))
            .collect(),
    };
    serde_json::to_string(&raw).expect("graph JSON serializes")
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
