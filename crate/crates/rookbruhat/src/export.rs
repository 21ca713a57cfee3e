//! Graphviz and JSON forms of a Hasse diagram.
//!
//! JSON schema:
//!
//! ```text
//! {"n": 2,
//!  "nodes": [{"id": 0, "oneline": "0,0", "length": 0}, ...],
//!  "edges": [[0, 1], ...]}
//! ```
//!
//! Ids are dense from 0 in lexicographic element order; edges point from
//! the lower element to the one covering it.

use std::fmt::Write;

use rookbruhat_core::length::length;
use rookbruhat_core::{HasseDiagram, Node, OneLine};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Serialize, Deserialize)]
struct JsonDiagram {
    n: usize,
    nodes: Vec<JsonNode>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
struct JsonNode {
    id: usize,
    oneline: String,
    length: usize,
}

pub fn export_dot(h: &HasseDiagram) -> String {
    let mut out = String::new();
    writeln!(out, "digraph R{} {{", h.n).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for node in &h.nodes {
        writeln!(out, "  n{} [label=\"({})\\nl={}\"];", node.id, node.element, node.length).unwrap();
    }
    for &(lo, hi) in &h.edges {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn export_json(h: &HasseDiagram) -> String {
    let doc = JsonDiagram {
        n: h.n,
        nodes: h
            .nodes
            .iter()
            .map(|node| JsonNode { id: node.id, oneline: node.element.to_string(), length: node.length })
            .collect(),
        edges: h.edges.iter().map(|&(lo, hi)| [lo, hi]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("diagram serializes")
}

/// Reads the JSON form back, checking ids, sizes, ordering and lengths.
pub fn parse_json(text: &str) -> Result<HasseDiagram> {
    let doc: JsonDiagram = serde_json::from_str(text)?;
    let mut nodes = Vec::with_capacity(doc.nodes.len());
    for (k, jn) in doc.nodes.into_iter().enumerate() {
        if jn.id != k {
            return Err(Error::Diagram(format!("node id {} at position {k}", jn.id)));
        }
        let element: OneLine = jn.oneline.parse()?;
        if element.n() != doc.n {
            return Err(Error::Diagram(format!("node {k} has size {}", element.n())));
        }
        if length(&element) != jn.length {
            return Err(Error::Diagram(format!("node {k} length {} != {}", jn.length, length(&element))));
        }
        nodes.push(Node { id: k, element, length: jn.length });
    }
    if nodes.windows(2).any(|w| w[0].element >= w[1].element) {
        return Err(Error::Diagram("nodes not in lexicographic order".into()));
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for [lo, hi] in doc.edges {
        if lo >= nodes.len() || hi >= nodes.len() {
            return Err(Error::Diagram(format!("edge [{lo}, {hi}] out of range")));
        }
        edges.push((lo, hi));
    }
    Ok(HasseDiagram { n: doc.n, nodes, edges })
}
