use std::collections::VecDeque;

use crate::graph::Graph;

/// BFS distances from `source`; `None` for unreachable vertices.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.order()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let d = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// The graph with no vertices counts as connected.
pub fn is_connected(g: &Graph) -> bool {
    g.is_empty() || distances_from(g, 0).iter().all(Option::is_some)
}

/// Largest distance between two vertices; `None` when disconnected.
pub fn diameter(g: &Graph) -> Option<usize> {
    let mut best = 0;
    for v in 0..g.order() {
        for d in distances_from(g, v) {
            best = best.max(d?);
        }
    }
    Some(best)
}
