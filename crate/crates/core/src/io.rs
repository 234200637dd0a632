//! Canonical JSON and DOT forms of graphs and posets.
//!
//! JSON output is byte-stable: elements are sorted by label, index pairs are
//! sorted lexicographically, and the text is compact with a trailing newline.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::order::{OrderError, Poset};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Fs(#[from] std::io::Error),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[usize; 2]>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetJson {
    elements: Vec<String>,
    leq: Vec<[usize; 2]>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let g = g.sorted_by_label();
    let doc = GraphJson { vertices: g.labels().to_vec(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() };
    let mut s = serde_json::to_string(&doc).expect("graph serialises");
    s.push('\n');
    s
}

/// Accepts edges in either orientation and any order.
pub fn graph_from_json(text: &str) -> Result<Graph, IoError> {
    let doc: GraphJson = serde_json::from_str(text)?;
    let mut g = Graph::new(doc.vertices)?;
    for [u, v] in doc.edges {
        g.try_add_edge(u, v)?;
    }
    Ok(g)
}

pub fn poset_to_json(p: &Poset) -> String {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
    let p = p.restrict(&order);
    let doc =
        PosetJson { elements: p.labels().to_vec(), leq: p.relation_pairs().into_iter().map(|(a, b)| [a, b]).collect() };
    let mut s = serde_json::to_string(&doc).expect("poset serialises");
    s.push('\n');
    s
}

/// The `leq` list must already be a partial order, reflexive pairs included.
pub fn poset_from_json(text: &str) -> Result<Poset, IoError> {
    let doc: PosetJson = serde_json::from_str(text)?;
    let pairs: Vec<(usize, usize)> = doc.leq.into_iter().map(|[a, b]| (a, b)).collect();
    Ok(Poset::from_pairs(doc.elements, &pairs)?)
}

fn quoted(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_to_dot(g: &Graph) -> String {
    let g = g.sorted_by_label();
    let mut s = String::from("graph G {\n");
    for l in g.labels() {
        writeln!(s, "  {};", quoted(l)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {} -- {};", quoted(g.label(u)), quoted(g.label(v))).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Hasse diagram, drawn bottom to top.
pub fn poset_to_dot(p: &Poset) -> String {
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by(|&a, &b| p.label(a).cmp(p.label(b)));
    let p = p.restrict(&order);
    let mut s = String::from("digraph P {\n  rankdir=BT;\n");
    for l in p.labels() {
        writeln!(s, "  {};", quoted(l)).unwrap();
    }
    for (a, b) in p.covers() {
        writeln!(s, "  {} -> {};", quoted(p.label(a)), quoted(p.label(b))).unwrap();
    }
    s.push_str("}\n");
    s
}

/// Writes through a temporary file in the same directory, then renames, so
/// readers never observe a partial file.
pub fn write_atomic(path: &Path, contents: &str) -> Result<(), IoError> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.as_file().sync_all()?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}
