//! Equality of graphs as labelled objects: same vertex labels, same edges
//! between equally labelled endpoints.

use std::collections::BTreeSet;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabeledEquality {
    Equal,
    /// A label present on one side only; `in_left` tells which side has it.
    VertexMismatch {
        label: String,
        in_left: bool,
    },
    /// An edge present on one side only.
    EdgeMismatch {
        a: String,
        b: String,
        in_left: bool,
    },
}

impl LabeledEquality {
    pub fn is_equal(&self) -> bool {
        matches!(self, LabeledEquality::Equal)
    }
}

/// Compares vertex labels first, then edges, reporting the smallest
/// discrepancy in label order.
pub fn graphs_equal_labeled(g: &Graph, h: &Graph) -> LabeledEquality {
    let lg: BTreeSet<&str> = g.labels().iter().map(String::as_str).collect();
    let lh: BTreeSet<&str> = h.labels().iter().map(String::as_str).collect();
    if let Some(&label) = lg.symmetric_difference(&lh).next() {
        return LabeledEquality::VertexMismatch { label: label.to_string(), in_left: lg.contains(label) };
    }
    let edge_set = |x: &Graph| -> BTreeSet<(String, String)> {
        x.edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (x.label(u).to_string(), x.label(v).to_string());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    };
    let (eg, eh) = (edge_set(g), edge_set(h));
    match eg.symmetric_difference(&eh).next() {
        Some((a, b)) => {
            LabeledEquality::EdgeMismatch { a: a.clone(), b: b.clone(), in_left: eg.contains(&(a.clone(), b.clone())) }
        }
        None => LabeledEquality::Equal,
    }
}
