//! Twin quotients of graphs.
//!
//! * [`reduce`] merges adjacent twins: `u ≃ v` iff `u = v`, or `u - v` and
//!   `N(u) \ {v} = N(v) \ {u}`.
//! * [`neighborhood_quotient`] merges vertices with equal open neighbourhoods.
//!
//! Quotient vertices are labelled by the smallest member label.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("twin relation is not transitive: {0:?} ≃ {1:?} ≃ {2:?} but not {0:?} ≃ {2:?}")]
    NonTransitive(String, String, String),
}

/// A quotient graph with its class structure.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub graph: Graph,
    /// Member vertex indices of each class, ascending; class `i` is vertex `i` of `graph`.
    pub classes: Vec<Vec<usize>>,
    /// Class index of every input vertex.
    pub class_of: Vec<usize>,
}

fn punctured_equal(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighborhood(u).clone();
    let mut nv = g.neighborhood(v).clone();
    nu.set(v, false);
    nv.set(u, false);
    nu == nv
}

/// `G_red`. The relation is checked for transitivity on the instance.
pub fn reduce(g: &Graph) -> Result<Graph, QuotientError> {
    Ok(reduce_with_classes(g)?.graph)
}

pub fn reduce_with_classes(g: &Graph) -> Result<Quotient, QuotientError> {
    let n = g.order();
    let related = |u: usize, v: usize| u == v || (g.has_edge(u, v) && punctured_equal(g, u, v));
    let twins: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&v| v != u && related(u, v)).collect()).collect();
    for u in 0..n {
        for &v in &twins[u] {
            for &w in &twins[v] {
                if w != u && !related(u, w) {
                    return Err(QuotientError::NonTransitive(g.label(u).into(), g.label(v).into(), g.label(w).into()));
                }
            }
        }
    }
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for u in 0..n {
        if class_of[u] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = vec![u];
        members.extend(twins[u].iter().copied());
        members.sort_unstable();
        for &m in &members {
            class_of[m] = id;
        }
        classes.push(members);
    }
    Ok(build_quotient(g, classes, class_of))
}

/// `[G]`: classes of equal open neighbourhoods.
pub fn neighborhood_quotient(g: &Graph) -> Graph {
    neighborhood_quotient_with_classes(g).graph
}

pub fn neighborhood_quotient_with_classes(g: &Graph) -> Quotient {
    let n = g.order();
    let mut by_nbhd: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = Vec::with_capacity(n);
    for u in 0..n {
        let key: Vec<usize> = g.neighbors(u).collect();
        let id = *by_nbhd.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[id].push(u);
        class_of.push(id);
    }
    build_quotient(g, classes, class_of)
}

fn build_quotient(g: &Graph, classes: Vec<Vec<usize>>, class_of: Vec<usize>) -> Quotient {
    let labels = classes.iter().map(|c| c.iter().map(|&m| g.label(m)).min().unwrap().to_owned());
    let mut graph = Graph::new(labels).expect("member labels are unique");
    for (u, v) in g.edges() {
        let (cu, cv) = (class_of[u], class_of[v]);
        if cu != cv {
            graph.add_edge(cu, cv);
        }
    }
    Quotient { graph, classes, class_of }
}
