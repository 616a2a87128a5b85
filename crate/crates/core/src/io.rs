//! Plain-text graph files.
//!
//! ```text
//! # triangle
//! vertex 1
//! vertex 2
//! vertex 3
//! edge 1 1 2
//! edge 2 2 3
//! edge 3 3 1
//! ```
//!
//! Everything after `#` is ignored. Edge lines fix the stored orientation
//! (tail to head) and the edge order.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

fn parse_id(token: &str, line: usize, what: &str) -> Result<u32> {
    token
        .parse()
        .map_err(|_| Error::input(format!("line {line}: {what} `{token}` is not an unsigned integer")))
}

pub fn parse_graph_str(text: &str) -> Result<Graph> {
    let mut vertices = BTreeSet::new();
    let mut edges: Vec<(usize, Edge)> = Vec::new();
    let mut edge_ids = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["vertex", id] => {
                vertices.insert(VertexId(parse_id(id, line, "vertex id")?));
            }
            ["edge", id, tail, head] => {
                let id = parse_id(id, line, "edge id")?;
                let tail = parse_id(tail, line, "tail")?;
                let head = parse_id(head, line, "head")?;
                if !edge_ids.insert(id) {
                    return Err(Error::input(format!("line {line}: duplicate edge id {id}")));
                }
                edges.push((line, Edge::new(id, tail, head)));
            }
            _ => {
                return Err(Error::input(format!(
                    "line {line}: expected `vertex <id>` or `edge <id> <tail> <head>`, found `{content}`"
                )))
            }
        }
    }
    for (line, e) in &edges {
        for v in [e.tail, e.head] {
            if !vertices.contains(&v) {
                return Err(Error::input(format!(
                    "line {line}: edge {} references unknown vertex {v}",
                    e.id
                )));
            }
        }
    }
    Graph::new(vertices, edges.into_iter().map(|(_, e)| e))
}

pub fn parse_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph_str(&text)
}

/// Inverse of [`parse_graph_str`] up to comments and whitespace.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        writeln!(out, "vertex {v}").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "edge {} {} {}", e.id, e.tail, e.head).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeId;

    #[test]
    fn single_edge_and_loop() {
        let g = parse_graph_str("vertex 1\nvertex 2\nedge 1 1 2\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 1));
        let g = parse_graph_str("vertex 1\nedge 1 1 1").unwrap();
        assert!(g.edges()[0].is_loop());
    }

    #[test]
    fn comments_blank_lines_and_order() {
        let text = "# header\n\nvertex 3 # trailing\nvertex 1\nedge 9 3 1\nedge 2 1 3\n";
        let g = parse_graph_str(text).unwrap();
        let ids: Vec<EdgeId> = g.edges().iter().map(|e| e.id).collect();
        assert_eq!(ids, vec![EdgeId(9), EdgeId(2)]);
        assert_eq!(g.edges()[0].tail, VertexId(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let dup = parse_graph_str("vertex 1\nedge 1 1 1\nedge 1 1 1\n").unwrap_err();
        assert!(dup.to_string().contains("line 3: duplicate edge id 1"), "{dup}");
        let unknown = parse_graph_str("vertex 1\nedge 4 1 2\n").unwrap_err();
        assert!(unknown.to_string().contains("line 2: edge 4 references unknown vertex 2"), "{unknown}");
        let bad = parse_graph_str("vertex 1\nvertx 2\n").unwrap_err();
        assert!(bad.to_string().contains("line 2"), "{bad}");
        let neg = parse_graph_str("vertex -1\n").unwrap_err();
        assert!(matches!(neg, Error::Input(_)));
    }

    #[test]
    fn roundtrip() {
        let g = Graph::complete(4).reoriented(crate::graph::EdgeSubset::from_mask(0b101)).unwrap();
        assert_eq!(parse_graph_str(&write_graph(&g)).unwrap(), g);
    }
}
