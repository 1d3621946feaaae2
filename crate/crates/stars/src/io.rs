//! Plain-text edge-list format.
//!
//! The first significant line is the header `n <count>`, followed by one
//! `u v` pair per line (0-based, whitespace-separated). Lines whose first
//! non-blank character is `#` are comments; blank lines are skipped.
//! Canonical output writes `u v` with `u < v`, sorted lexicographically,
//! so rendering is bit-stable: `render(parse(render(g))) == render(g)`.

use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {0}: expected header `n <count>`")]
    MissingHeader(usize),
    #[error("line {line}: cannot parse `{content}`")]
    BadLine { line: usize, content: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        last_line = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut tok = line.split_whitespace();
        match n {
            None => {
                let ok = tok.next() == Some("n");
                let count = tok.next().and_then(|t| t.parse::<usize>().ok());
                match (ok, count, tok.next()) {
                    (true, Some(c), None) => n = Some(c),
                    _ => return Err(EdgeListError::MissingHeader(last_line)),
                }
            }
            Some(_) => {
                let u = tok.next().and_then(|t| t.parse::<usize>().ok());
                let v = tok.next().and_then(|t| t.parse::<usize>().ok());
                match (u, v, tok.next()) {
                    (Some(u), Some(v), None) => edges.push((u, v)),
                    _ => {
                        return Err(EdgeListError::BadLine {
                            line: last_line,
                            content: line.to_string(),
                        })
                    }
                }
            }
        }
    }
    let n = n.ok_or(EdgeListError::MissingHeader(last_line + 1))?;
    Ok(Graph::build(n, edges)?)
}

/// Canonical rendering: header, then edges sorted lexicographically.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{} {}\n", u, v));
    }
    out
}

pub fn read_graph_file(path: &Path) -> Result<Graph, EdgeListError> {
    let text = fs::read_to_string(path)?;
    parse_edge_list(&text)
}
