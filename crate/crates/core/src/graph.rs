//! Finite simple undirected graphs with stable string labels, plus the graph
//! algebra used throughout the crate (complement, join, complete graphs).

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("vertex index {index} out of range for graph of order {order}")]
    OutOfRange { index: usize, order: usize },
    #[error("self-loop at vertex {0:?}")]
    SelfLoop(String),
}

/// Simple graph: symmetric, irreflexive adjacency stored as bitset rows.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<I, S>(labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Graph { labels, index, adj: vec![FixedBitSet::with_capacity(n); n] })
    }

    pub fn from_edges<I, S>(labels: I, edges: &[(usize, usize)]) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Graph::new(labels)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices labelled `"0"`, `"1"`, ...
    pub fn edgeless(n: usize) -> Self {
        Graph::new((0..n).map(|i| i.to_string())).unwrap()
    }

    /// `K_n` with numeric labels.
    pub fn complete_numbered(n: usize) -> Self {
        Graph::edgeless(n).complement()
    }

    /// The cycle `C_n` (n >= 3) with numeric labels.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::edgeless(n);
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
        g
    }

    /// The path on `n` vertices with numeric labels.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_edge_labels(&self, a: &str, b: &str) -> Result<bool, GraphError> {
        let u = self.index_of(a).ok_or_else(|| GraphError::UnknownLabel(a.to_owned()))?;
        let v = self.index_of(b).ok_or_else(|| GraphError::UnknownLabel(b.to_owned()))?;
        Ok(self.has_edge(u, v))
    }

    /// Adds `u - v`. Panics on a loop or an out-of-range index.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).unwrap();
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let order = self.order();
        for index in [u, v] {
            if index >= order {
                return Err(GraphError::OutOfRange { index, order });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    /// Open neighbourhood `N(v)` as a bitset over vertex indices.
    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges `(u, v)` with `u < v`, in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Induced subgraph on `vertices`, keeping their labels and the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::new(vertices.iter().map(|&v| self.labels[v].clone())).unwrap();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut adj = Vec::with_capacity(n);
        for (v, row) in self.adj.iter().enumerate() {
            let mut c = row.clone();
            c.toggle_range(..);
            c.set(v, false);
            adj.push(c);
        }
        Graph { labels: self.labels.clone(), index: self.index.clone(), adj }
    }

    /// Same graph with vertices reordered by label.
    pub fn sorted_by_label(&self) -> Graph {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by(|&a, &b| self.labels[a].cmp(&self.labels[b]));
        self.induced(&order)
    }

    /// Replaces every label via `f`; fails if the result has duplicates.
    pub fn relabeled<F: FnMut(&str) -> String>(&self, mut f: F) -> Result<Graph, GraphError> {
        let mut g = Graph::new(self.labels.iter().map(|l| f(l)))?;
        g.adj = self.adj.clone();
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<(&str, &str)> = self.edges().into_iter().map(|(u, v)| (self.label(u), self.label(v))).collect();
        f.debug_struct("Graph").field("vertices", &self.labels).field("edges", &edges).finish()
    }
}

/// `K_t` on the given labels.
pub fn complete<I, S>(labels: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    Ok(Graph::new(labels)?.complement())
}

/// A label of the right operand that had to be renamed by [`join_recorded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    pub from: String,
    pub to: String,
}

/// Graph join `G ∨ H`: disjoint union plus every edge between the two sides.
///
/// Labels of `h` that collide with labels of `g` are renamed by appending
/// `'`; use [`join_recorded`] to see the renames.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    join_recorded(g, h).0
}

pub fn join_recorded(g: &Graph, h: &Graph) -> (Graph, Vec<Relabel>) {
    let mut renames = Vec::new();
    let mut labels: Vec<String> = g.labels.clone();
    let mut taken: std::collections::HashSet<String> = labels.iter().cloned().collect();
    taken.extend(h.labels.iter().cloned());
    for l in &h.labels {
        if g.index.contains_key(l) {
            let mut fresh = format!("{l}'");
            while taken.contains(&fresh) {
                fresh.push('\'');
            }
            taken.insert(fresh.clone());
            renames.push(Relabel { from: l.clone(), to: fresh.clone() });
            labels.push(fresh);
        } else {
            labels.push(l.clone());
        }
    }

    let offset = g.order();
    let mut out = Graph::new(labels).expect("labels made unique above");
    for (u, v) in g.edges() {
        out.add_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.add_edge(offset + u, offset + v);
    }
    for u in 0..g.order() {
        for v in 0..h.order() {
            out.add_edge(u, offset + v);
        }
    }
    (out, renames)
}
